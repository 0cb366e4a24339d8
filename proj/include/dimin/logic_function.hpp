#pragma once

#include <dimin/bitvec.hpp>
#include <dimin/cube.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dimin
{

/// Single-output incompletely specified function given by cube lists.
struct logic_function
{
  std::size_t num_inputs = 0;
  std::vector<cube> on;
  std::vector<cube> off;
  std::vector<cube> dc;
  std::string name;
};

/*! \brief ON minterms in canonical order.
 *
 * ON cubes are visited in order and each one's minterms enumerated with the
 * don't-care positions counting up in binary; repeats are dropped.  Throws
 * `size_guard_error` beyond `limit` minterms.
 */
std::vector<bitvec> on_minterms( logic_function const& f, std::size_t limit = std::size_t{ 1 } << 22 );

/// Throws `inconsistent_function` when an ON cube intersects an OFF cube.
void check_consistent( logic_function const& f );

enum class tri : std::uint8_t
{
  zero,
  one,
  dc
};

/// Multiple-output truth table; output j is `values[j]`, printed rightmost for j = 0.
struct multi_function
{
  struct row
  {
    bitvec minterm;
    std::vector<tri> values;
  };

  std::size_t num_inputs = 0;
  std::size_t num_outputs = 0;
  /// At most one row per minterm, sorted by minterm; missing minterms are all-dc.
  std::vector<row> rows;
  std::string name;

  /// Value of output `j` at `minterm` (dc when no row exists).
  tri value( bitvec const& minterm, std::size_t j ) const;
  /// Single-output view of output `j` with minterm cubes.
  logic_function output( std::size_t j ) const;
};

/// Builds a table from rows given as text pairs, e.g. {"000", "101"}; '-' is dc.
multi_function make_multi_function( std::size_t num_inputs, std::size_t num_outputs,
                                    std::vector<std::pair<std::string, std::string>> const& rows );

} // namespace dimin
