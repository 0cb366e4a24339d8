#pragma once

#include <dimin/bitvec.hpp>
#include <dimin/cube.hpp>
#include <dimin/reduced_offset.hpp>

#include <span>
#include <vector>

namespace dimin
{

/// One-hot projections of a DI: the variables of one DeMorgan clause.
struct clause_vectors
{
  std::vector<bitvec> one_hots;
};

/*! \brief Literal-position vectors of the products of the expanded POS.
 *
 * Each vector marks the variables of one prime implicant; values come from
 * the ON minterm.  Pairwise incomparable under `subset_ones`.
 */
struct nvector_set
{
  std::vector<bitvec> vectors;
};

/// Splits D into its popcount(D) one-hot projections, most significant first.
clause_vectors generate_m( diff_indicator const& d );

/// Drops strict supersets and later duplicates; survivors keep their order.
nvector_set minimize_n( std::vector<bitvec> vectors );

/// Every e|v for e in N, v in M (N-major), then `minimize_n`.
nvector_set cross_or( nvector_set const& n, clause_vectors const& m );

/// Observer for `generate_n`: (index, clause vectors, N after the step).
using n_observer = std::function<void( std::size_t, clause_vectors const&, nvector_set const& )>;

/// Folds `generate_m` + `cross_or` over the DIs in order, starting from {0}.
nvector_set generate_n( di_set const& s, n_observer const& observer = {} );

/// One cube per vector: C_L = ~P | ~e, C_R = P | ~e.
std::vector<cube> vectors_to_pis( bitvec const& p, nvector_set const& n );

/*! \brief All prime implicants containing minterm `p`.
 *
 * The care-true region is the complement of `off`.  Result is sorted by cube
 * text.  An empty OFF-set yields the universal cube.
 */
std::vector<cube> generate_spi( bitvec const& p, std::span<cube const> off );

/// Intermediate results of one `generate_spi` run.
struct spi_trace
{
  struct sdm_entry
  {
    bitvec di;
    reform_step step;
    std::vector<bitvec> set_after;
  };
  struct n_entry
  {
    bitvec di;
    std::vector<bitvec> m;
    std::vector<bitvec> n_after;
  };

  bitvec minterm;
  std::vector<sdm_entry> sdm_steps;
  di_set sdm;
  std::vector<n_entry> n_steps;
  nvector_set n;
  std::vector<cube> primes;
  bool empty_offset = false;
};

spi_trace generate_spi_traced( bitvec const& p, std::span<cube const> off );

} // namespace dimin
