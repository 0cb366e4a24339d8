#include <dimin/bitvec.hpp>
#include <dimin/errors.hpp>

#include <algorithm>
#include <bit>

namespace dimin
{

namespace
{

std::size_t words_for( std::size_t width )
{
  return std::max<std::size_t>( 1u, ( width + bitvec::word_bits - 1 ) / bitvec::word_bits );
}

} // namespace

bitvec::bitvec( std::size_t width ) : width_( width ), words_( words_for( width ), 0u )
{
}

bitvec::bitvec( std::size_t width, word_type value ) : bitvec( width )
{
  words_[0] = value;
  clear_padding();
}

bitvec bitvec::ones( std::size_t width )
{
  bitvec b( width );
  std::fill( b.words_.begin(), b.words_.end(), ~word_type{ 0 } );
  b.clear_padding();
  return b;
}

bitvec bitvec::from_string( std::string_view text )
{
  bitvec b( text.size() );
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    switch ( text[i] )
    {
    case '0':
      break;
    case '1':
      b.set_var( i );
      break;
    default:
      throw parse_error( "illegal bit character '" + std::string( 1, text[i] ) + "' in \"" + std::string( text ) + "\"" );
    }
  }
  return b;
}

void bitvec::set( std::size_t pos, bool value ) noexcept
{
  auto const mask = word_type{ 1 } << ( pos % word_bits );
  if ( value )
    words_[pos / word_bits] |= mask;
  else
    words_[pos / word_bits] &= ~mask;
}

void bitvec::set_word( std::size_t i, word_type w ) noexcept
{
  words_[i] = w;
  if ( i + 1 == words_.size() )
    clear_padding();
}

bool bitvec::any() const noexcept
{
  return std::any_of( words_.begin(), words_.end(), []( word_type w ) { return w != 0; } );
}

bool bitvec::all() const noexcept
{
  return *this == ones( width_ );
}

std::size_t bitvec::count() const noexcept
{
  std::size_t c = 0;
  for ( auto w : words_ )
    c += std::popcount( w );
  return c;
}

std::string bitvec::to_string() const
{
  std::string s( width_, '0' );
  for ( std::size_t i = 0; i < width_; ++i )
    if ( test_var( i ) )
      s[i] = '1';
  return s;
}

void bitvec::check_width( bitvec const& other ) const
{
  if ( width_ != other.width_ )
    throw usage_error( "bit width mismatch: " + std::to_string( width_ ) + " vs " + std::to_string( other.width_ ) );
}

void bitvec::clear_padding() noexcept
{
  auto const tail = width_ % word_bits;
  if ( tail != 0 )
    words_.back() &= ( word_type{ 1 } << tail ) - 1;
  if ( width_ == 0 )
    words_.back() = 0;
}

bitvec& bitvec::operator&=( bitvec const& other )
{
  check_width( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] &= other.words_[i];
  return *this;
}

bitvec& bitvec::operator|=( bitvec const& other )
{
  check_width( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] |= other.words_[i];
  return *this;
}

bitvec& bitvec::operator^=( bitvec const& other )
{
  check_width( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] ^= other.words_[i];
  return *this;
}

bitvec bitvec::operator~() const
{
  bitvec r( *this );
  for ( auto& w : r.words_ )
    w = ~w;
  r.clear_padding();
  return r;
}

std::strong_ordering operator<=>( bitvec const& a, bitvec const& b ) noexcept
{
  if ( auto c = a.width_ <=> b.width_; c != 0 )
    return c;
  for ( std::size_t i = a.words_.size(); i-- > 0; )
    if ( auto c = a.words_[i] <=> b.words_[i]; c != 0 )
      return c;
  return std::strong_ordering::equal;
}

std::size_t bitvec::hash() const noexcept
{
  std::size_t h = std::hash<std::size_t>{}( width_ );
  for ( auto w : words_ )
    h ^= std::hash<word_type>{}( w ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  return h;
}

bool subset_ones( bitvec const& a, bitvec const& b )
{
  if ( a.width() != b.width() )
    throw usage_error( "subset_ones: bit width mismatch" );
  for ( std::size_t i = 0; i < a.num_words(); ++i )
    if ( ( a.word( i ) & b.word( i ) ) != a.word( i ) )
      return false;
  return true;
}

std::pair<bitvec, bitvec> split_lowest_one( bitvec const& a )
{
  if ( a.none() )
    throw usage_error( "split_lowest_one: argument is zero" );

  /* rest = (a - 1) & a, one_hot = rest ^ a; the subtraction borrows across words */
  bitvec rest( a.width() );
  bool borrow = true;
  for ( std::size_t i = 0; i < a.num_words(); ++i )
  {
    auto const w = a.word( i );
    auto const dec = borrow ? w - 1 : w;
    borrow = borrow && w == 0;
    rest.set_word( i, dec & w );
  }
  auto one_hot = rest ^ a;
  return { std::move( one_hot ), std::move( rest ) };
}

} // namespace dimin
