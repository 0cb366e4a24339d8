#include <dimin/cover.hpp>
#include <dimin/errors.hpp>
#include <dimin/pi_gen.hpp>

#include <chrono>
#include <sstream>

namespace dimin
{

coverage_mask coverage_of( cube const& pi, std::span<bitvec const> on )
{
  coverage_mask mask( on.size() );
  for ( std::size_t i = 0; i < on.size(); ++i )
    if ( cube_contains_minterm( pi, on[i] ) )
      mask.set_var( i );
  return mask;
}

epi_choice select_epi( std::span<candidate const> candidates, coverage_mask const& uncovered )
{
  if ( candidates.empty() )
    throw usage_error( "select_epi: no candidates" );

  std::vector<coverage_mask> live;
  live.reserve( candidates.size() );
  for ( auto const& c : candidates )
    live.push_back( c.mask & uncovered );

  epi_choice best;
  std::size_t best_count = live[0].count();
  std::string best_text = candidates[0].pi.to_string();
  for ( std::size_t i = 1; i < candidates.size(); ++i )
  {
    auto const count = live[i].count();
    auto text = candidates[i].pi.to_string();
    if ( count > best_count || ( count == best_count && text < best_text ) )
    {
      best.index = i;
      best_count = count;
      best_text = std::move( text );
    }
  }

  best.dominant = true;
  for ( std::size_t i = 0; i < candidates.size() && best.dominant; ++i )
  {
    if ( i == best.index )
      continue;
    best.dominant = subset_ones( live[i], live[best.index] ) && live[i] != live[best.index];
  }
  return best;
}

cover_result direct_cover( logic_function const& f, cover_options const& options )
{
  auto const start = std::chrono::steady_clock::now();

  check_consistent( f );
  cover_result result;
  result.on_minterms = on_minterms( f, options.max_on_minterms );
  auto const& on = result.on_minterms;
  if ( on.empty() )
    throw empty_onset();

  auto uncovered = coverage_mask::ones( on.size() );
  std::size_t next = 0;
  while ( uncovered.any() )
  {
    while ( !uncovered.test_var( next ) )
      ++next;
    auto const& origin = on[next];

    std::vector<cube> pis;
    if ( f.off.empty() )
    {
      pis.push_back( cube::universe( f.num_inputs ) );
    }
    else
    {
      auto const sdm = generate_sdm( origin, f.off );
      result.stats.sdm_sizes.push_back( sdm.size() );
      pis = vectors_to_pis( origin, generate_n( sdm ) );
      sort_by_text( pis );
    }
    ++result.stats.pi_sets;
    result.stats.primes_generated += pis.size();

    std::vector<candidate> candidates;
    candidates.reserve( pis.size() );
    for ( auto& pi : pis )
    {
      auto mask = coverage_of( pi, on );
      candidates.push_back( { std::move( pi ), std::move( mask ) } );
    }
    auto const choice = select_epi( candidates, uncovered );
    auto& chosen = candidates[choice.index];

    uncovered &= ~chosen.mask;
    result.cubes.push_back( std::move( chosen.pi ) );
    result.coverage.push_back( std::move( chosen.mask ) );
    ++result.stats.iterations;
  }

  if ( options.irredundant )
  {
    for ( std::size_t i = result.cubes.size(); i-- > 0; )
    {
      coverage_mask others( on.size() );
      for ( std::size_t k = 0; k < result.cubes.size(); ++k )
        if ( k != i )
          others |= result.coverage[k];
      if ( others.all() )
      {
        result.cubes.erase( result.cubes.begin() + static_cast<std::ptrdiff_t>( i ) );
        result.coverage.erase( result.coverage.begin() + static_cast<std::ptrdiff_t>( i ) );
      }
    }
  }

  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
  return result;
}

std::vector<cube> uncovered_parts( cube const& c, std::span<cube const> cover )
{
  std::vector<cube> out;
  std::vector<cube> stack{ c };
  while ( !stack.empty() )
  {
    auto part = std::move( stack.back() );
    stack.pop_back();

    std::vector<cube const*> touching;
    bool contained = false;
    for ( auto const& k : cover )
    {
      if ( cube_contains( k, part ) )
      {
        contained = true;
        break;
      }
      if ( cube_intersects( k, part ) )
        touching.push_back( &k );
    }
    if ( contained )
      continue;
    if ( touching.empty() )
    {
      out.push_back( std::move( part ) );
      continue;
    }

    /* some touching cube specifies a variable that is free in part */
    auto const free = part.dc_mask();
    std::size_t split = part.width();
    for ( auto const* k : touching )
    {
      auto const cand = free & k->care_mask();
      for ( std::size_t v = 0; v < part.width() && split == part.width(); ++v )
        if ( cand.test_var( v ) )
          split = v;
      if ( split != part.width() )
        break;
    }

    auto l0 = part.left(), r0 = part.right();
    r0.set_var( split, false );
    auto l1 = part.left(), r1 = part.right();
    l1.set_var( split, false );
    /* push the 1-half first so the 0-half is reported first */
    stack.emplace_back( std::move( l1 ), std::move( r1 ) );
    stack.emplace_back( std::move( l0 ), std::move( r0 ) );
  }
  return out;
}

verify_report verify_cover( std::span<cube const> cover, logic_function const& f )
{
  verify_report report;
  for ( auto const& c : f.on )
    for ( auto& part : uncovered_parts( c, cover ) )
      report.uncovered.push_back( std::move( part ) );

  for ( std::size_t i = 0; i < cover.size(); ++i )
  {
    bool hits_off = false;
    for ( std::size_t k = 0; k < f.off.size(); ++k )
    {
      if ( cube_intersects( cover[i], f.off[k] ) )
      {
        report.off_hits.emplace_back( i, k );
        hits_off = true;
      }
    }
    if ( hits_off )
      continue;

    auto const care = cover[i].care_mask();
    for ( std::size_t v = 0; v < cover[i].width(); ++v )
    {
      if ( !care.test_var( v ) )
        continue;
      auto const raised = cover[i].raised( v );
      bool blocked = false;
      for ( auto const& z : f.off )
        if ( ( blocked = cube_intersects( raised, z ) ) )
          break;
      if ( !blocked )
        report.non_prime.emplace_back( i, v );
    }
  }
  return report;
}

std::string verify_report::to_string( std::span<cube const> cover, logic_function const& f ) const
{
  std::ostringstream os;
  os << "coverage: " << ( uncovered.empty() ? "ok" : "FAIL" ) << "\n";
  for ( auto const& c : uncovered )
    os << "  uncovered ON part " << c.to_string() << "\n";
  os << "off-disjoint: " << ( off_hits.empty() ? "ok" : "FAIL" ) << "\n";
  for ( auto const& [i, k] : off_hits )
    os << "  cube " << cover[i].to_string() << " intersects OFF cube " << f.off[k].to_string() << "\n";
  os << "prime: " << ( non_prime.empty() ? "ok" : "FAIL" ) << "\n";
  for ( auto const& [i, v] : non_prime )
    os << "  cube " << cover[i].to_string() << " can drop the literal at variable " << v << "\n";
  return os.str();
}

} // namespace dimin
