#include <dimin/errors.hpp>
#include <dimin/reduced_offset.hpp>

#include <algorithm>

namespace dimin
{

double di_set::average_comparisons() const noexcept
{
  return folded_ == 0 ? 0.0 : static_cast<double>( comparisons_ ) / static_cast<double>( folded_ );
}

diff_indicator generate_di( bitvec const& p, cube const& z )
{
  if ( p.width() != z.width() )
    throw usage_error( "generate_di: width mismatch" );
  if ( z.is_empty() )
    throw usage_error( "generate_di: empty OFF-cube" );

  auto d = ( p ^ z.right() ) & ( z.left() ^ z.right() );
  if ( d.none() )
    throw inconsistent_function( "minterm " + p.to_string() + " lies in OFF-cube " + z.to_string() );
  return { std::move( d ) };
}

reform_step reform_sdm_step( di_set& s, diff_indicator const& d )
{
  if ( d.value.none() )
    throw usage_error( "reform_sdm: zero difference indicator" );

  reform_step step;
  auto& elems = s.elements_;
  std::vector<bool> absorbed( elems.size(), false );

  bool redundant = false;
  for ( std::size_t i = elems.size(); i-- > 0; )
  {
    ++step.comparisons;
    auto const a = elems[i] & d.value;
    if ( a == elems[i] )
    {
      redundant = true;
      step.absorptions = 1;
      break;
    }
    if ( a == d.value )
    {
      absorbed[i] = true;
      ++step.absorptions;
    }
  }

  if ( !redundant )
  {
    if ( step.absorptions != 0 )
    {
      std::size_t out = 0;
      for ( std::size_t i = 0; i < elems.size(); ++i )
        if ( !absorbed[i] )
        {
          if ( out != i )
            elems[out] = std::move( elems[i] );
          ++out;
        }
      elems.resize( out );
    }
    elems.push_back( d.value );
    step.inserted = true;
  }

  s.comparisons_ += step.comparisons;
  s.absorptions_ += step.absorptions;
  ++s.folded_;
  return step;
}

di_set reform_sdm( di_set s, diff_indicator const& d )
{
  reform_sdm_step( s, d );
  return s;
}

di_set generate_sdm( bitvec const& p, std::span<cube const> off, sdm_observer const& observer )
{
  if ( off.empty() )
    throw empty_offset();

  di_set s( { bitvec::ones( p.width() ) } );
  for ( std::size_t j = 0; j < off.size(); ++j )
  {
    auto const d = generate_di( p, off[j] );
    auto const step = reform_sdm_step( s, d );
    if ( observer )
      observer( j, d, step, s );
  }
  return s;
}

cube reduce_off_cube( bitvec const& p, cube const& z )
{
  if ( p.width() != z.width() )
    throw usage_error( "reduce_off_cube: width mismatch" );
  if ( z.is_empty() )
    throw usage_error( "reduce_off_cube: empty OFF-cube" );

  std::string text( z.width(), 'x' );
  for ( std::size_t i = 0; i < z.width(); ++i )
  {
    auto const zi = z.at( i );
    auto const complement_of_p = p.test_var( i ) ? '0' : '1';
    if ( zi == complement_of_p )
      text[i] = zi;
  }
  return cube::from_string( text );
}

cube derive_rc( bitvec const& p, diff_indicator const& d )
{
  auto const not_d = ~d.value;
  return cube( p | not_d, ~p | not_d );
}

std::vector<cube> minimize_sr( std::span<cube const> reduced )
{
  std::vector<cube> out;
  for ( std::size_t i = 0; i < reduced.size(); ++i )
  {
    bool redundant = false;
    for ( std::size_t j = 0; j < reduced.size() && !redundant; ++j )
    {
      if ( i == j )
        continue;
      if ( reduced[i] == reduced[j] )
        redundant = j < i;
      else
        redundant = cube_contains( reduced[j], reduced[i] );
    }
    if ( !redundant )
      out.push_back( reduced[i] );
  }
  return out;
}

} // namespace dimin
