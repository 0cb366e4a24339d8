#pragma once

#include <dimin/bitvec.hpp>
#include <dimin/cube.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dimin
{

/*! \brief Single-string encoding of a reduced OFF-cube.
 *
 * Relative to an ON minterm P, bit i is 1 when the reduced cube keeps a
 * literal at variable i (necessarily the complement of p_i) and 0 when the
 * variable is a don't care.
 */
struct diff_indicator
{
  bitvec value;

  friend bool operator==( diff_indicator const&, diff_indicator const& ) = default;
};

/// Counters of one `reform_sdm` call.
struct reform_step
{
  std::size_t comparisons = 0;
  /// Elements removed, counting the incoming DI when it is itself absorbed.
  std::size_t absorptions = 0;
  bool inserted = false;
};

/*! \brief Absorption-minimal set of difference indicators.
 *
 * Elements are pairwise incomparable under `subset_ones`, kept in insertion
 * order.  The counters accumulate over every `reform_sdm` call.
 */
class di_set
{
public:
  di_set() = default;
  explicit di_set( std::vector<bitvec> elements ) : elements_( std::move( elements ) ) {}

  std::vector<bitvec> const& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  std::size_t comparisons() const noexcept { return comparisons_; }
  std::size_t absorptions() const noexcept { return absorptions_; }
  /// Number of DIs folded in (one per OFF-cube).
  std::size_t folded() const noexcept { return folded_; }
  /// comparisons() / folded(), 0 when nothing was folded.
  double average_comparisons() const noexcept;

private:
  friend reform_step reform_sdm_step( di_set& s, diff_indicator const& d );

  std::vector<bitvec> elements_;
  std::size_t comparisons_ = 0;
  std::size_t absorptions_ = 0;
  std::size_t folded_ = 0;
};

/// D = (P xor Z.right) and (Z.left xor Z.right); throws inconsistent_function when P lies in Z.
diff_indicator generate_di( bitvec const& p, cube const& z );

/*! \brief Folds `d` into `s` in place and reports the step counters.
 *
 * Elements are scanned newest first.  The scan stops as soon as an element
 * absorbs `d`; otherwise every element absorbed by `d` is dropped and `d` is
 * appended.
 */
reform_step reform_sdm_step( di_set& s, diff_indicator const& d );

/// Value form of `reform_sdm_step`.
di_set reform_sdm( di_set s, diff_indicator const& d );

/// Observer for `generate_sdm`: (index, DI, step counters, set after the step).
using sdm_observer = std::function<void( std::size_t, diff_indicator const&, reform_step const&, di_set const& )>;

/*! \brief Builds S_DM(p) directly from the OFF-set.
 *
 * Seeds the all-ones sentinel, then folds every OFF-cube via `generate_di`
 * and `reform_sdm_step`.  Throws `empty_offset` for an empty OFF-set and
 * `inconsistent_function` when `p` lies in an OFF-cube.
 */
di_set generate_sdm( bitvec const& p, std::span<cube const> off, sdm_observer const& observer = {} );

/// Reference path: positionwise reduction of `z` against minterm `p`.
cube reduce_off_cube( bitvec const& p, cube const& z );

/// Reference path: the reduced cube a DI stands for.
cube derive_rc( bitvec const& p, diff_indicator const& d );

/// Reference path: drops every cube contained in another one (first duplicate kept).
std::vector<cube> minimize_sr( std::span<cube const> reduced );

} // namespace dimin
