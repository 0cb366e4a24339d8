#pragma once

#include <dimin/bitvec.hpp>
#include <dimin/cover.hpp>
#include <dimin/cube.hpp>
#include <dimin/logic_function.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dimin
{

/// A minterm with the set of outputs it still makes true; bit j of `tag` is Y_j.
struct tagged_minterm
{
  bitvec minterm;
  bitvec tag;
  std::size_t weight = 0;
};

struct tagged_cube
{
  cube c;
  bitvec tag;

  /// e.g. "1x1_{2,0}" or "x00_0".
  std::string to_string() const;
  friend bool operator==( tagged_cube const&, tagged_cube const& ) = default;
};

/// Builds a tag over `num_outputs` outputs from output indices.
bitvec make_tag( std::size_t num_outputs, std::initializer_list<std::size_t> outputs );

/// Minterms with at least one true output, by ascending weight then minterm.
std::vector<tagged_minterm> build_tagged( multi_function const& f );

/// Minterms where some output of `tag` is 0 (dc does not force OFF).
std::vector<cube> subfunction_off( bitvec const& tag, multi_function const& f );

/// Symmetric difference of two coverage masks.
coverage_mask neighbors( coverage_mask const& a, coverage_mask const& b );

/*! \brief Working table of the multiple-output loop.
 *
 * Committing a tagged cube turns every 1 it covers (for the outputs in its
 * tag) into a don't care, which is how covered minterms drop out of later
 * sub-functions while still being usable by their primes.
 */
class edsa_state
{
public:
  explicit edsa_state( multi_function f );

  multi_function const& table() const noexcept { return table_; }
  /// Minterms true for some output in the original table; the mask index space.
  std::vector<bitvec> const& universe() const noexcept { return universe_; }

  std::vector<tagged_minterm> pending() const { return build_tagged( table_ ); }
  std::vector<cube> off( bitvec const& tag ) const { return subfunction_off( tag, table_ ); }
  /// Mask of minterms where every output of `tag` is 1 or dc and at least one is still 1.
  coverage_mask on_mask( bitvec const& tag ) const;
  /// Outputs still true at `minterm`.
  bitvec current_tag( bitvec const& minterm ) const;
  coverage_mask coverage( cube const& pi, bitvec const& tag ) const;

  void commit( tagged_cube const& tc );

private:
  multi_function table_;
  std::vector<bitvec> universe_;
};

/// One loop iteration of `edsa_minimize`, kept for tracing and tests.
struct edsa_decision
{
  struct neighbor_eval
  {
    bitvec minterm;
    bitvec tag;
    cube best;
  };

  tagged_minterm origin;
  std::vector<cube> pis;
  std::vector<coverage_mask> masks;
  bool dominant = false;
  coverage_mask neighbor_mask;
  std::vector<neighbor_eval> evaluated;
  std::vector<tagged_cube> committed;
};

struct edsa_result
{
  std::vector<tagged_cube> cubes;
  std::vector<edsa_decision> trace;
};

/// Prime of `tm` under its current tag with fewest literals (then most coverage, then text).
cube best_neighbor_prime( edsa_state const& state, bitvec const& minterm, bitvec const& tag );

/*! \brief Multiple-output minimization with tags and neighbor lookahead.
 *
 * Origins are taken by ascending tag weight, ties by minterm value.  A
 * dominating prime is committed directly.  Otherwise each candidate is scored
 * by the neighbor minterms it leaves uncovered: the stranded neighbor whose
 * own best prime has the fewest literals decides, and that prime is committed
 * as well under the neighbor's tag.  A single-output table goes through
 * `direct_cover`.
 */
edsa_result edsa_minimize( multi_function const& f );

struct multi_verify_report
{
  /// (output, minterm) pairs that are true but reached by no cube tagged with that output.
  std::vector<std::pair<std::size_t, bitvec>> uncovered;
  /// (cube index, minterm) where the cube covers a 0 of an output in its tag.
  std::vector<std::pair<std::size_t, bitvec>> off_hits;
  /// (cube index, variable) where the literal can be dropped without hitting the tag's OFF-set.
  std::vector<std::pair<std::size_t, std::size_t>> non_prime;

  bool ok() const noexcept { return uncovered.empty() && off_hits.empty() && non_prime.empty(); }
  std::string to_string( std::span<tagged_cube const> cover ) const;
};

/// Per-output coverage, OFF-disjointness and primality against each cube's tag sub-function.
multi_verify_report verify_tagged_cover( std::span<tagged_cube const> cover, multi_function const& f );

} // namespace dimin
