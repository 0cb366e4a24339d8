#include <dimin/errors.hpp>
#include <dimin/pi_gen.hpp>

#include <algorithm>

namespace dimin
{

clause_vectors generate_m( diff_indicator const& d )
{
  if ( d.value.none() )
    throw usage_error( "generate_m: zero difference indicator" );

  clause_vectors m;
  auto rest = d.value;
  while ( rest.any() )
  {
    auto [one_hot, remaining] = split_lowest_one( rest );
    m.one_hots.push_back( std::move( one_hot ) );
    rest = std::move( remaining );
  }
  std::reverse( m.one_hots.begin(), m.one_hots.end() );
  return m;
}

nvector_set minimize_n( std::vector<bitvec> vectors )
{
  std::vector<bool> dead( vectors.size(), false );
  for ( std::size_t i = 0; i < vectors.size(); ++i )
  {
    if ( dead[i] )
      continue;
    for ( std::size_t k = i + 1; k < vectors.size(); ++k )
    {
      if ( dead[k] )
        continue;
      auto const both = vectors[i] & vectors[k];
      if ( both == vectors[i] )
      {
        dead[k] = true;
      }
      else if ( both == vectors[k] )
      {
        dead[i] = true;
        break;
      }
    }
  }

  nvector_set out;
  for ( std::size_t i = 0; i < vectors.size(); ++i )
    if ( !dead[i] )
      out.vectors.push_back( std::move( vectors[i] ) );
  return out;
}

nvector_set cross_or( nvector_set const& n, clause_vectors const& m )
{
  if ( n.vectors.empty() || m.one_hots.empty() )
    throw usage_error( "cross_or: empty operand" );

  std::vector<bitvec> product;
  product.reserve( n.vectors.size() * m.one_hots.size() );
  for ( auto const& e : n.vectors )
    for ( auto const& v : m.one_hots )
      product.push_back( e | v );
  return minimize_n( std::move( product ) );
}

nvector_set generate_n( di_set const& s, n_observer const& observer )
{
  if ( s.empty() )
    throw usage_error( "generate_n: empty DI set" );

  nvector_set n{ { bitvec( s.elements().front().width() ) } };
  for ( std::size_t j = 0; j < s.size(); ++j )
  {
    auto const m = generate_m( { s.elements()[j] } );
    n = cross_or( n, m );
    if ( observer )
      observer( j, m, n );
  }
  return n;
}

std::vector<cube> vectors_to_pis( bitvec const& p, nvector_set const& n )
{
  std::vector<cube> pis;
  pis.reserve( n.vectors.size() );
  auto const not_p = ~p;
  for ( auto const& e : n.vectors )
  {
    auto const not_e = ~e;
    pis.emplace_back( not_p | not_e, p | not_e );
  }
  return pis;
}

std::vector<cube> generate_spi( bitvec const& p, std::span<cube const> off )
{
  if ( off.empty() )
    return { cube::universe( p.width() ) };
  auto const sdm = generate_sdm( p, off );
  auto pis = vectors_to_pis( p, generate_n( sdm ) );
  sort_by_text( pis );
  return pis;
}

spi_trace generate_spi_traced( bitvec const& p, std::span<cube const> off )
{
  spi_trace t;
  t.minterm = p;
  if ( off.empty() )
  {
    t.empty_offset = true;
    t.primes = { cube::universe( p.width() ) };
    return t;
  }

  t.sdm = generate_sdm( p, off, [&]( std::size_t, diff_indicator const& d, reform_step const& step, di_set const& s ) {
    t.sdm_steps.push_back( { d.value, step, s.elements() } );
  } );
  t.n = generate_n( t.sdm, [&]( std::size_t j, clause_vectors const& m, nvector_set const& n ) {
    t.n_steps.push_back( { t.sdm.elements()[j], m.one_hots, n.vectors } );
  } );
  t.primes = vectors_to_pis( p, t.n );
  sort_by_text( t.primes );
  return t;
}

} // namespace dimin
