#pragma once

#include <dimin/bitvec.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dimin
{

/*! \brief Product term in positional-cube notation.
 *
 * Every variable owns one bit of `left()` and one bit of `right()`:
 * (0,1) is the positive literal, (1,0) the negative literal and (1,1) a
 * don't care.  The (0,0) pair never occurs inside a cube; a cube with no
 * minterms is represented by the explicit empty state instead.
 */
class cube
{
public:
  cube() = default;
  /// Builds a cube from its two bit planes; a (0,0) pair yields the empty cube.
  cube( bitvec left, bitvec right );

  static cube universe( std::size_t width );
  static cube empty( std::size_t width );
  /// Parses {0,1,x,X,-}, leftmost character is variable 0 (the MSB).
  static cube from_string( std::string_view text );

  std::size_t width() const noexcept { return left_.width(); }
  bool is_empty() const noexcept { return empty_; }

  bitvec const& left() const noexcept { return left_; }
  bitvec const& right() const noexcept { return right_; }

  /// 1 where the variable appears as a literal.
  bitvec care_mask() const { return left_ ^ right_; }
  /// 1 where the variable is a don't care.
  bitvec dc_mask() const { return left_ & right_; }

  std::size_t literal_count() const { return care_mask().count(); }
  bool is_minterm() const { return !empty_ && dc_mask().none(); }

  /// Character of variable `var`: '0', '1' or 'x'.
  char at( std::size_t var ) const;
  /// Copy of this cube with variable `var` replaced by a don't care.
  cube raised( std::size_t var ) const;

  /// Text over {0,1,x}; `dc` substitutes the don't-care character.
  std::string to_string( char dc = 'x' ) const;

  friend bool operator==( cube const&, cube const& ) = default;
  friend auto operator<=>( cube const& a, cube const& b ) = default;

private:
  bitvec left_;
  bitvec right_;
  bool empty_ = false;
};

/// The cube covering exactly minterm `p`.
cube minterm_to_cube( bitvec const& p );

/// True iff every minterm of `d` lies in `c`.
bool cube_contains( cube const& c, cube const& d );

/// True iff `c` and `d` share a minterm.
bool cube_intersects( cube const& c, cube const& d );

/// True iff minterm `p` lies in `c`.
bool cube_contains_minterm( cube const& c, bitvec const& p );

inline std::string cube_text( cube const& c ) { return c.to_string(); }
inline cube text_cube( std::string_view s ) { return cube::from_string( s ); }

/// Enumerates the minterms of `c`, don't-care positions counting up in binary.
void for_each_minterm( cube const& c, std::function<void( bitvec const& )> const& fn );

/// Sorts by cube text; the stable order used for reporting.
void sort_by_text( std::vector<cube>& cubes );

} // namespace dimin

template<>
struct std::hash<dimin::cube>
{
  std::size_t operator()( dimin::cube const& c ) const noexcept
  {
    return c.left().hash() * 31u + c.right().hash() + ( c.is_empty() ? 1u : 0u );
  }
};
