#include <dimin/errors.hpp>
#include <dimin/multi_output.hpp>
#include <dimin/pi_gen.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>

namespace dimin
{

std::string tagged_cube::to_string() const
{
  std::vector<std::size_t> outs;
  for ( std::size_t j = tag.width(); j-- > 0; )
    if ( tag.test( j ) )
      outs.push_back( j );

  auto s = c.to_string() + "_";
  if ( outs.size() == 1 )
    return s + std::to_string( outs[0] );
  s += "{";
  for ( std::size_t i = 0; i < outs.size(); ++i )
    s += ( i ? "," : "" ) + std::to_string( outs[i] );
  return s + "}";
}

bitvec make_tag( std::size_t num_outputs, std::initializer_list<std::size_t> outputs )
{
  bitvec tag( num_outputs );
  for ( auto j : outputs )
  {
    if ( j >= num_outputs )
      throw usage_error( "make_tag: output index out of range" );
    tag.set( j );
  }
  return tag;
}

std::vector<tagged_minterm> build_tagged( multi_function const& f )
{
  std::vector<tagged_minterm> out;
  for ( auto const& r : f.rows )
  {
    bitvec tag( f.num_outputs );
    for ( std::size_t j = 0; j < f.num_outputs; ++j )
      if ( r.values[j] == tri::one )
        tag.set( j );
    if ( tag.any() )
      out.push_back( { r.minterm, tag, tag.count() } );
  }
  std::stable_sort( out.begin(), out.end(), []( auto const& a, auto const& b ) {
    return std::tie( a.weight, a.minterm ) < std::tie( b.weight, b.minterm );
  } );
  return out;
}

std::vector<cube> subfunction_off( bitvec const& tag, multi_function const& f )
{
  if ( tag.width() != f.num_outputs || tag.none() )
    throw usage_error( "subfunction_off: tag must be a nonempty output subset" );

  std::vector<cube> off;
  for ( auto const& r : f.rows )
  {
    for ( std::size_t j = 0; j < f.num_outputs; ++j )
    {
      if ( tag.test( j ) && r.values[j] == tri::zero )
      {
        off.push_back( minterm_to_cube( r.minterm ) );
        break;
      }
    }
  }
  return off;
}

coverage_mask neighbors( coverage_mask const& a, coverage_mask const& b )
{
  return a ^ b;
}

edsa_state::edsa_state( multi_function f ) : table_( std::move( f ) )
{
  for ( auto const& r : table_.rows )
    if ( std::find( r.values.begin(), r.values.end(), tri::one ) != r.values.end() )
      universe_.push_back( r.minterm );
}

bitvec edsa_state::current_tag( bitvec const& minterm ) const
{
  bitvec tag( table_.num_outputs );
  for ( std::size_t j = 0; j < table_.num_outputs; ++j )
    if ( table_.value( minterm, j ) == tri::one )
      tag.set( j );
  return tag;
}

coverage_mask edsa_state::on_mask( bitvec const& tag ) const
{
  coverage_mask mask( universe_.size() );
  for ( std::size_t i = 0; i < universe_.size(); ++i )
  {
    bool compatible = true, pending = false;
    for ( std::size_t j = 0; j < table_.num_outputs && compatible; ++j )
    {
      if ( !tag.test( j ) )
        continue;
      auto const v = table_.value( universe_[i], j );
      compatible = v != tri::zero;
      pending = pending || v == tri::one;
    }
    if ( compatible && pending )
      mask.set_var( i );
  }
  return mask;
}

coverage_mask edsa_state::coverage( cube const& pi, bitvec const& tag ) const
{
  return coverage_of( pi, universe_ ) & on_mask( tag );
}

void edsa_state::commit( tagged_cube const& tc )
{
  for ( auto& r : table_.rows )
  {
    if ( !cube_contains_minterm( tc.c, r.minterm ) )
      continue;
    for ( std::size_t j = 0; j < table_.num_outputs; ++j )
    {
      if ( !tc.tag.test( j ) )
        continue;
      if ( r.values[j] == tri::zero )
        throw inconsistent_function( "cube " + tc.to_string() + " covers OFF minterm " + r.minterm.to_string() );
      if ( r.values[j] == tri::one )
        r.values[j] = tri::dc;
    }
  }
}

cube best_neighbor_prime( edsa_state const& state, bitvec const& minterm, bitvec const& tag )
{
  auto const off = state.off( tag );
  auto const pis = generate_spi( minterm, off );

  std::size_t best = 0;
  auto key = [&]( cube const& c ) {
    return std::make_tuple( c.literal_count(), std::numeric_limits<std::size_t>::max() - state.coverage( c, tag ).count(),
                            c.to_string() );
  };
  auto best_key = key( pis[0] );
  for ( std::size_t i = 1; i < pis.size(); ++i )
  {
    auto k = key( pis[i] );
    if ( k < best_key )
    {
      best = i;
      best_key = std::move( k );
    }
  }
  return pis[best];
}

namespace
{

edsa_result single_output( multi_function const& f )
{
  edsa_result result;
  auto const cover = direct_cover( f.output( 0 ) );
  for ( auto const& c : cover.cubes )
    result.cubes.push_back( { c, make_tag( 1, { 0 } ) } );
  return result;
}

} // namespace

edsa_result edsa_minimize( multi_function const& f )
{
  if ( f.num_outputs == 1 )
    return single_output( f );

  edsa_result result;
  edsa_state state( f );

  for ( auto pending = state.pending(); !pending.empty(); pending = state.pending() )
  {
    edsa_decision d;
    d.origin = pending.front();
    auto const& tag = d.origin.tag;

    d.pis = generate_spi( d.origin.minterm, state.off( tag ) );
    auto const live = state.on_mask( tag );
    std::vector<candidate> candidates;
    for ( auto const& pi : d.pis )
    {
      d.masks.push_back( coverage_of( pi, state.universe() ) & live );
      candidates.push_back( { pi, d.masks.back() } );
    }

    auto const choice = select_epi( candidates, live );
    d.dominant = choice.dominant;
    d.neighbor_mask = coverage_mask( state.universe().size() );

    std::size_t chosen = choice.index;
    std::optional<tagged_cube> extra;
    if ( !choice.dominant )
    {
      auto all = d.masks[0], common = d.masks[0];
      for ( auto const& m : d.masks )
      {
        all |= m;
        common &= m;
      }
      d.neighbor_mask = all & ~common;

      /* one lookahead per neighbor minterm, shared between candidates */
      std::vector<std::optional<tagged_cube>> lookahead( state.universe().size() );
      for ( std::size_t i = 0; i < state.universe().size(); ++i )
      {
        if ( !d.neighbor_mask.test_var( i ) )
          continue;
        auto const& nm = state.universe()[i];
        auto const ntag = state.current_tag( nm );
        auto best = best_neighbor_prime( state, nm, ntag );
        d.evaluated.push_back( { nm, ntag, best } );
        lookahead[i] = tagged_cube{ std::move( best ), ntag };
      }

      using score_t = std::tuple<std::size_t, std::size_t, std::string>;
      std::optional<score_t> best_score;
      for ( std::size_t k = 0; k < candidates.size(); ++k )
      {
        auto const stranded = d.neighbor_mask & ~d.masks[k];
        std::size_t literals = 0;
        std::optional<tagged_cube> partner;
        for ( std::size_t i = 0; i < state.universe().size(); ++i )
        {
          if ( !stranded.test_var( i ) )
            continue;
          auto const l = lookahead[i]->c.literal_count();
          if ( !partner || l < literals )
          {
            literals = l;
            partner = lookahead[i];
          }
        }
        score_t score{ literals, std::numeric_limits<std::size_t>::max() - d.masks[k].count(), candidates[k].pi.to_string() };
        if ( !best_score || score < *best_score )
        {
          best_score = std::move( score );
          chosen = k;
          extra = std::move( partner );
        }
      }
    }

    tagged_cube const committed{ candidates[chosen].pi, tag };
    state.commit( committed );
    d.committed.push_back( committed );
    result.cubes.push_back( committed );
    if ( extra )
    {
      state.commit( *extra );
      d.committed.push_back( *extra );
      result.cubes.push_back( *extra );
    }
    result.trace.push_back( std::move( d ) );
  }
  return result;
}

multi_verify_report verify_tagged_cover( std::span<tagged_cube const> cover, multi_function const& f )
{
  multi_verify_report report;
  for ( std::size_t j = 0; j < f.num_outputs; ++j )
    for ( auto const& r : f.rows )
    {
      if ( r.values[j] != tri::one )
        continue;
      bool reached = false;
      for ( auto const& tc : cover )
        if ( ( reached = tc.tag.test( j ) && cube_contains_minterm( tc.c, r.minterm ) ) )
          break;
      if ( !reached )
        report.uncovered.emplace_back( j, r.minterm );
    }

  for ( std::size_t i = 0; i < cover.size(); ++i )
  {
    auto const off = subfunction_off( cover[i].tag, f );
    bool hits = false;
    for ( auto const& z : off )
      if ( cube_intersects( cover[i].c, z ) )
      {
        report.off_hits.emplace_back( i, z.right() );
        hits = true;
      }
    if ( hits )
      continue;
    auto const care = cover[i].c.care_mask();
    for ( std::size_t v = 0; v < f.num_inputs; ++v )
    {
      if ( !care.test_var( v ) )
        continue;
      auto const raised = cover[i].c.raised( v );
      if ( std::none_of( off.begin(), off.end(), [&]( cube const& z ) { return cube_intersects( raised, z ); } ) )
        report.non_prime.emplace_back( i, v );
    }
  }
  return report;
}

std::string multi_verify_report::to_string( std::span<tagged_cube const> cover ) const
{
  std::ostringstream os;
  os << "coverage: " << ( uncovered.empty() ? "ok" : "FAIL" ) << "\n";
  for ( auto const& [j, m] : uncovered )
    os << "  output " << j << " minterm " << m.to_string() << " uncovered\n";
  os << "off-disjoint: " << ( off_hits.empty() ? "ok" : "FAIL" ) << "\n";
  for ( auto const& [i, m] : off_hits )
    os << "  cube " << cover[i].to_string() << " covers OFF minterm " << m.to_string() << "\n";
  os << "prime: " << ( non_prime.empty() ? "ok" : "FAIL" ) << "\n";
  for ( auto const& [i, v] : non_prime )
    os << "  cube " << cover[i].to_string() << " can drop the literal at variable " << v << "\n";
  return os.str();
}

} // namespace dimin
