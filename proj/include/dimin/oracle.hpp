#pragma once

#include <dimin/cube.hpp>
#include <dimin/logic_function.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace dimin::oracle
{

/// Dense value map over all 2^n minterms; index = minterm value.
struct truth_table
{
  std::size_t num_inputs = 0;
  std::vector<tri> values;

  static truth_table from_function( logic_function const& f, std::size_t max_inputs = 20 );
};

/*! \brief Every prime implicant of ON u DC, by Quine-McCluskey merging.
 *
 * Everything not in OFF counts as true, so primes covering only don't-care
 * minterms are included.  Result sorted by cube text.  n <= 14.
 */
std::vector<cube> all_primes( logic_function const& f );

/// Primes from `all_primes` that contain `p`.
std::vector<cube> primes_containing( std::span<cube const> primes, bitvec const& p );

/// True iff both covers agree on every care minterm of `care`.  n <= 20.
bool equivalent( std::span<cube const> a, std::span<cube const> b, truth_table const& care );

/// Size of a minimum cover of the ON minterms by primes, exhaustive branch and bound.  n <= 6.
std::size_t exact_min_cover_size( logic_function const& f );

} // namespace dimin::oracle
