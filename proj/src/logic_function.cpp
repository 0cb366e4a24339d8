#include <dimin/errors.hpp>
#include <dimin/logic_function.hpp>

#include <algorithm>
#include <unordered_set>

namespace dimin
{

std::vector<bitvec> on_minterms( logic_function const& f, std::size_t limit )
{
  std::vector<bitvec> out;
  std::unordered_set<bitvec> seen;
  for ( auto const& c : f.on )
  {
    if ( c.dc_mask().count() >= 63 || ( std::size_t{ 1 } << c.dc_mask().count() ) > limit )
      throw size_guard_error( "ON cube " + c.to_string() + " expands beyond the minterm limit" );
    for_each_minterm( c, [&]( bitvec const& m ) {
      if ( seen.insert( m ).second )
      {
        if ( out.size() == limit )
          throw size_guard_error( "ON-set expands beyond " + std::to_string( limit ) + " minterms" );
        out.push_back( m );
      }
    } );
  }
  return out;
}

void check_consistent( logic_function const& f )
{
  for ( auto const& a : f.on )
    for ( auto const& b : f.off )
      if ( cube_intersects( a, b ) )
        throw inconsistent_function( "ON cube " + a.to_string() + " intersects OFF cube " + b.to_string() );
}

tri multi_function::value( bitvec const& minterm, std::size_t j ) const
{
  auto it = std::lower_bound( rows.begin(), rows.end(), minterm,
                              []( row const& r, bitvec const& m ) { return r.minterm < m; } );
  if ( it == rows.end() || it->minterm != minterm )
    return tri::dc;
  return it->values[j];
}

logic_function multi_function::output( std::size_t j ) const
{
  logic_function f;
  f.num_inputs = num_inputs;
  f.name = name;
  for ( auto const& r : rows )
  {
    switch ( r.values[j] )
    {
    case tri::one:
      f.on.push_back( minterm_to_cube( r.minterm ) );
      break;
    case tri::zero:
      f.off.push_back( minterm_to_cube( r.minterm ) );
      break;
    case tri::dc:
      f.dc.push_back( minterm_to_cube( r.minterm ) );
      break;
    }
  }
  return f;
}

multi_function make_multi_function( std::size_t num_inputs, std::size_t num_outputs,
                                    std::vector<std::pair<std::string, std::string>> const& rows )
{
  multi_function f;
  f.num_inputs = num_inputs;
  f.num_outputs = num_outputs;
  for ( auto const& [in, out] : rows )
  {
    if ( in.size() != num_inputs || out.size() != num_outputs )
      throw usage_error( "make_multi_function: row width mismatch" );
    multi_function::row r{ bitvec::from_string( in ), std::vector<tri>( num_outputs, tri::dc ) };
    for ( std::size_t k = 0; k < num_outputs; ++k )
    {
      /* leftmost character is the highest output index */
      auto const j = num_outputs - 1 - k;
      switch ( out[k] )
      {
      case '0':
        r.values[j] = tri::zero;
        break;
      case '1':
        r.values[j] = tri::one;
        break;
      case '-':
      case 'x':
        r.values[j] = tri::dc;
        break;
      default:
        throw parse_error( "illegal output character in \"" + out + "\"" );
      }
    }
    f.rows.push_back( std::move( r ) );
  }
  std::sort( f.rows.begin(), f.rows.end(), []( auto const& a, auto const& b ) { return a.minterm < b.minterm; } );
  auto dup = std::adjacent_find( f.rows.begin(), f.rows.end(),
                                 []( auto const& a, auto const& b ) { return a.minterm == b.minterm; } );
  if ( dup != f.rows.end() )
    throw usage_error( "make_multi_function: duplicate row " + dup->minterm.to_string() );
  return f;
}

} // namespace dimin
