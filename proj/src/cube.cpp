#include <dimin/cube.hpp>
#include <dimin/errors.hpp>

#include <algorithm>

namespace dimin
{

cube::cube( bitvec left, bitvec right ) : left_( std::move( left ) ), right_( std::move( right ) )
{
  if ( left_.width() != right_.width() )
    throw usage_error( "cube: left/right width mismatch" );
  if ( !( left_ | right_ ).all() )
  {
    *this = empty( left_.width() );
  }
}

cube cube::universe( std::size_t width )
{
  return cube( bitvec::ones( width ), bitvec::ones( width ) );
}

cube cube::empty( std::size_t width )
{
  cube c;
  c.left_ = bitvec( width );
  c.right_ = bitvec( width );
  c.empty_ = true;
  return c;
}

cube cube::from_string( std::string_view text )
{
  if ( text.empty() )
    throw parse_error( "empty cube text" );
  bitvec left( text.size() ), right( text.size() );
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    switch ( text[i] )
    {
    case '0':
      left.set_var( i );
      break;
    case '1':
      right.set_var( i );
      break;
    case 'x':
    case 'X':
    case '-':
      left.set_var( i );
      right.set_var( i );
      break;
    default:
      throw parse_error( "illegal cube character '" + std::string( 1, text[i] ) + "' in \"" + std::string( text ) + "\"" );
    }
  }
  return cube( std::move( left ), std::move( right ) );
}

char cube::at( std::size_t var ) const
{
  auto const l = left_.test_var( var );
  auto const r = right_.test_var( var );
  if ( l && r )
    return 'x';
  return r ? '1' : '0';
}

cube cube::raised( std::size_t var ) const
{
  cube c( *this );
  c.left_.set_var( var );
  c.right_.set_var( var );
  return c;
}

std::string cube::to_string( char dc ) const
{
  if ( empty_ )
    return "(empty)";
  std::string s( width(), '0' );
  for ( std::size_t i = 0; i < width(); ++i )
  {
    auto const ch = at( i );
    s[i] = ch == 'x' ? dc : ch;
  }
  return s;
}

cube minterm_to_cube( bitvec const& p )
{
  return cube( ~p, p );
}

bool cube_contains( cube const& c, cube const& d )
{
  if ( c.width() != d.width() )
    throw usage_error( "cube_contains: width mismatch" );
  if ( d.is_empty() )
    return true;
  if ( c.is_empty() )
    return false;
  return subset_ones( d.left(), c.left() ) && subset_ones( d.right(), c.right() );
}

bool cube_intersects( cube const& c, cube const& d )
{
  if ( c.width() != d.width() )
    throw usage_error( "cube_intersects: width mismatch" );
  if ( c.is_empty() || d.is_empty() )
    return false;
  return ( ( c.left() & d.left() ) | ( c.right() & d.right() ) ).all();
}

bool cube_contains_minterm( cube const& c, bitvec const& p )
{
  if ( c.width() != p.width() )
    throw usage_error( "cube_contains_minterm: width mismatch" );
  if ( c.is_empty() )
    return false;
  /* p is inside iff it agrees with c on every cared position */
  return ( ( p ^ c.right() ) & c.care_mask() ).none();
}

void for_each_minterm( cube const& c, std::function<void( bitvec const& )> const& fn )
{
  if ( c.is_empty() )
    return;
  std::vector<std::size_t> free_pos; // LSB positions, ascending
  auto const dc = c.dc_mask();
  for ( std::size_t pos = 0; pos < c.width(); ++pos )
    if ( dc.test( pos ) )
      free_pos.push_back( pos );
  if ( free_pos.size() >= 63 )
    throw size_guard_error( "for_each_minterm: too many don't cares" );

  auto m = c.right() & c.care_mask();
  std::uint64_t const total = std::uint64_t{ 1 } << free_pos.size();
  for ( std::uint64_t k = 0; k < total; ++k )
  {
    for ( std::size_t j = 0; j < free_pos.size(); ++j )
      m.set( free_pos[j], ( k >> j ) & 1u );
    fn( m );
  }
}

void sort_by_text( std::vector<cube>& cubes )
{
  std::sort( cubes.begin(), cubes.end(), []( cube const& a, cube const& b ) { return a.to_string() < b.to_string(); } );
}

} // namespace dimin
