#pragma once

#include <dimin/bitvec.hpp>
#include <dimin/cube.hpp>
#include <dimin/logic_function.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dimin
{

/// Bit i (counted from the left) stands for the i-th indexed ON minterm.
using coverage_mask = bitvec;

/// Mask of the ON minterms contained in `pi`.
coverage_mask coverage_of( cube const& pi, std::span<bitvec const> on );

struct candidate
{
  cube pi;
  coverage_mask mask;
};

struct epi_choice
{
  std::size_t index = 0;
  /// The winner's uncovered coverage strictly contains every other candidate's.
  bool dominant = false;
};

/*! \brief Picks the PI to commit for the current origin.
 *
 * Coverage is restricted to `uncovered`.  A strictly dominating candidate
 * wins outright; otherwise the largest uncovered count wins, ties going to
 * the smallest cube text.
 */
epi_choice select_epi( std::span<candidate const> candidates, coverage_mask const& uncovered );

struct cover_options
{
  /// Drop cubes made redundant by later ones after the main loop.
  bool irredundant = false;
  std::size_t max_on_minterms = std::size_t{ 1 } << 22;
};

struct cover_stats
{
  std::size_t iterations = 0;
  std::size_t pi_sets = 0;
  std::size_t primes_generated = 0;
  /// w(S_DM) for every origin minterm, in processing order.
  std::vector<std::size_t> sdm_sizes;
  double elapsed_ms = 0.0;
};

struct cover_result
{
  std::vector<cube> cubes;
  std::vector<coverage_mask> coverage;
  /// Index space of the coverage masks.
  std::vector<bitvec> on_minterms;
  cover_stats stats;
};

/*! \brief Direct-cover heuristic.
 *
 * Repeatedly takes the first uncovered ON minterm, generates all primes
 * containing it, commits the one chosen by `select_epi` and marks what it
 * covers.  Throws `empty_onset` and `inconsistent_function`.
 */
cover_result direct_cover( logic_function const& f, cover_options const& options = {} );

struct verify_report
{
  /// ON sub-cubes no cover cube reaches.
  std::vector<cube> uncovered;
  /// (cover index, OFF index) pairs that intersect.
  std::vector<std::pair<std::size_t, std::size_t>> off_hits;
  /// (cover index, variable) pairs where dropping the literal still avoids OFF.
  std::vector<std::pair<std::size_t, std::size_t>> non_prime;

  bool ok() const noexcept { return uncovered.empty() && off_hits.empty() && non_prime.empty(); }
  std::string to_string( std::span<cube const> cover, logic_function const& f ) const;
};

verify_report verify_cover( std::span<cube const> cover, logic_function const& f );
inline verify_report verify_cover( cover_result const& r, logic_function const& f ) { return verify_cover( r.cubes, f ); }

/// Pieces of `c` outside the union of `cover`, found by Shannon splitting.
std::vector<cube> uncovered_parts( cube const& c, std::span<cube const> cover );

} // namespace dimin
