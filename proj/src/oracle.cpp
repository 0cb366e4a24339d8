#include <dimin/errors.hpp>
#include <dimin/oracle.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace dimin::oracle
{

namespace
{

/* (value, dash) pair over the low n bits; bit n-1 is the leftmost variable */
struct term
{
  std::uint32_t value;
  std::uint32_t dash;
};

term to_term( cube const& c )
{
  term t{ 0, 0 };
  auto const text = c.to_string();
  for ( char ch : text )
  {
    t.value <<= 1;
    t.dash <<= 1;
    if ( ch == '1' )
      t.value |= 1u;
    else if ( ch == 'x' )
      t.dash |= 1u;
  }
  return t;
}

cube to_cube( term t, std::size_t n )
{
  std::string text( n, '0' );
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto const bit = std::uint32_t{ 1 } << ( n - 1 - i );
    text[i] = ( t.dash & bit ) ? 'x' : ( ( t.value & bit ) ? '1' : '0' );
  }
  return cube::from_string( text );
}

template<typename Fn>
void enumerate( term t, Fn&& fn )
{
  /* iterate all subsets of the dash bits */
  std::uint32_t sub = 0;
  do
  {
    fn( t.value | sub );
    sub = ( sub - t.dash ) & t.dash;
  } while ( sub != 0 );
}

std::uint64_t key( term t )
{
  return ( std::uint64_t{ t.dash } << 32 ) | t.value;
}

} // namespace

truth_table truth_table::from_function( logic_function const& f, std::size_t max_inputs )
{
  if ( f.num_inputs > max_inputs )
    throw size_guard_error( "truth table limited to " + std::to_string( max_inputs ) + " inputs" );

  truth_table t{ f.num_inputs, std::vector<tri>( std::size_t{ 1 } << f.num_inputs, tri::dc ) };
  for ( auto const& c : f.on )
    enumerate( to_term( c ), [&]( std::uint32_t m ) { t.values[m] = tri::one; } );
  for ( auto const& c : f.off )
    enumerate( to_term( c ), [&]( std::uint32_t m ) {
      if ( t.values[m] == tri::one )
        throw inconsistent_function( "minterm in both ON and OFF" );
      t.values[m] = tri::zero;
    } );
  return t;
}

std::vector<cube> all_primes( logic_function const& f )
{
  if ( f.num_inputs > 14 )
    throw size_guard_error( "all_primes is limited to 14 inputs" );
  auto const table = truth_table::from_function( f, 14 );
  auto const n = f.num_inputs;

  std::vector<term> level;
  for ( std::uint32_t m = 0; m < table.values.size(); ++m )
    if ( table.values[m] != tri::zero )
      level.push_back( { m, 0 } );

  std::vector<term> primes;
  while ( !level.empty() )
  {
    std::unordered_set<std::uint64_t> present;
    for ( auto t : level )
      present.insert( key( t ) );

    std::unordered_set<std::uint64_t> merged, next_keys;
    std::vector<term> next;
    for ( auto t : level )
    {
      for ( std::size_t b = 0; b < n; ++b )
      {
        auto const bit = std::uint32_t{ 1 } << b;
        if ( ( t.dash & bit ) || ( t.value & bit ) )
          continue;
        term const partner{ t.value | bit, t.dash };
        if ( !present.count( key( partner ) ) )
          continue;
        merged.insert( key( t ) );
        merged.insert( key( partner ) );
        term const joined{ t.value, t.dash | bit };
        if ( next_keys.insert( key( joined ) ).second )
          next.push_back( joined );
      }
    }
    for ( auto t : level )
      if ( !merged.count( key( t ) ) )
        primes.push_back( t );
    level = std::move( next );
  }

  std::vector<cube> out;
  out.reserve( primes.size() );
  for ( auto t : primes )
    out.push_back( to_cube( t, n ) );
  sort_by_text( out );
  return out;
}

std::vector<cube> primes_containing( std::span<cube const> primes, bitvec const& p )
{
  std::vector<cube> out;
  auto const pt = to_term( minterm_to_cube( p ) ).value;
  for ( auto const& c : primes )
  {
    auto const t = to_term( c );
    if ( ( ( pt ^ t.value ) & ~t.dash ) == 0 )
      out.push_back( c );
  }
  return out;
}

bool equivalent( std::span<cube const> a, std::span<cube const> b, truth_table const& care )
{
  if ( care.num_inputs > 20 )
    throw size_guard_error( "equivalent is limited to 20 inputs" );

  auto eval = [&]( std::span<cube const> cover ) {
    std::vector<bool> v( care.values.size(), false );
    for ( auto const& c : cover )
      enumerate( to_term( c ), [&]( std::uint32_t m ) { v[m] = true; } );
    return v;
  };
  auto const va = eval( a ), vb = eval( b );
  for ( std::size_t m = 0; m < care.values.size(); ++m )
    if ( care.values[m] != tri::dc && va[m] != vb[m] )
      return false;
  return true;
}

std::size_t exact_min_cover_size( logic_function const& f )
{
  if ( f.num_inputs > 6 )
    throw size_guard_error( "exact_min_cover_size is limited to 6 inputs" );
  auto const table = truth_table::from_function( f, 6 );

  std::vector<std::uint32_t> on;
  for ( std::uint32_t m = 0; m < table.values.size(); ++m )
    if ( table.values[m] == tri::one )
      on.push_back( m );
  if ( on.empty() )
    return 0;

  std::vector<std::uint64_t> covers;
  for ( auto const& c : all_primes( f ) )
  {
    auto const t = to_term( c );
    std::uint64_t mask = 0;
    for ( std::size_t i = 0; i < on.size(); ++i )
      if ( ( ( on[i] ^ t.value ) & ~t.dash ) == 0 )
        mask |= std::uint64_t{ 1 } << i;
    if ( mask )
      covers.push_back( mask );
  }
  auto const largest = std::popcount( *std::max_element( covers.begin(), covers.end(),
                                                         []( auto x, auto y ) { return std::popcount( x ) < std::popcount( y ); } ) );

  auto const all = on.size() == 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << on.size() ) - 1;
  std::size_t best = on.size();

  auto search = [&]( auto&& self, std::uint64_t uncovered, std::size_t used ) -> void {
    if ( uncovered == 0 )
    {
      best = std::min( best, used );
      return;
    }
    auto const bound = used + ( std::popcount( uncovered ) + largest - 1 ) / largest;
    if ( bound >= best )
      return;

    /* branch on the uncovered minterm with the fewest covering primes */
    std::size_t pick = 0, fewest = covers.size() + 1;
    for ( auto rest = uncovered; rest; rest &= rest - 1 )
    {
      auto const i = static_cast<std::size_t>( std::countr_zero( rest ) );
      std::size_t n = 0;
      for ( auto c : covers )
        n += ( c >> i ) & 1u;
      if ( n < fewest )
      {
        fewest = n;
        pick = i;
      }
    }
    for ( auto c : covers )
      if ( ( c >> pick ) & 1u )
        self( self, uncovered & ~c, used + 1 );
  };
  search( search, all, 0 );
  return best;
}

} // namespace dimin::oracle
