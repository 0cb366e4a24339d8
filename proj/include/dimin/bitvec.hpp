#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dimin
{

/*! \brief Fixed-width bit string.
 *
 * Text form is MSB first: the leftmost character is bit `width-1`.  Bit
 * positions (`test`, `set`) count from the least significant end; `var`
 * positions count from the leftmost character, which is how cube variables
 * and coverage-mask indices are addressed.
 *
 * Storage is a sequence of 64-bit words, least significant word first.  All
 * storage bits at or above `width` are kept zero.
 */
class bitvec
{
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  bitvec() = default;
  explicit bitvec( std::size_t width );
  bitvec( std::size_t width, word_type value );

  static bitvec ones( std::size_t width );
  /// Parses '0'/'1' characters, MSB first.
  static bitvec from_string( std::string_view text );

  std::size_t width() const noexcept { return width_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  word_type word( std::size_t i ) const noexcept { return words_[i]; }
  /// Replaces storage word `i`; bits beyond the width are dropped.
  void set_word( std::size_t i, word_type w ) noexcept;

  bool test( std::size_t pos ) const noexcept { return ( words_[pos / word_bits] >> ( pos % word_bits ) ) & 1u; }
  void set( std::size_t pos, bool value = true ) noexcept;

  bool test_var( std::size_t var ) const noexcept { return test( width_ - 1 - var ); }
  void set_var( std::size_t var, bool value = true ) noexcept { set( width_ - 1 - var, value ); }

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  bool all() const noexcept;
  std::size_t count() const noexcept;

  /// Value of the low 64 bits.
  word_type to_uint() const noexcept { return words_.empty() ? 0u : words_[0]; }
  std::string to_string() const;

  bitvec& operator&=( bitvec const& other );
  bitvec& operator|=( bitvec const& other );
  bitvec& operator^=( bitvec const& other );
  bitvec operator~() const;

  friend bitvec operator&( bitvec a, bitvec const& b ) { return a &= b; }
  friend bitvec operator|( bitvec a, bitvec const& b ) { return a |= b; }
  friend bitvec operator^( bitvec a, bitvec const& b ) { return a ^= b; }

  friend bool operator==( bitvec const& a, bitvec const& b ) noexcept = default;
  /// Orders by width, then by numeric value.
  friend std::strong_ordering operator<=>( bitvec const& a, bitvec const& b ) noexcept;

  std::size_t hash() const noexcept;

private:
  void check_width( bitvec const& other ) const;
  void clear_padding() noexcept;

  std::size_t width_ = 0;
  std::vector<word_type> words_;
};

/// True iff every 1-bit of `a` is also set in `b`.
bool subset_ones( bitvec const& a, bitvec const& b );

/// Splits off the least significant 1-bit: returns (one_hot, rest).
std::pair<bitvec, bitvec> split_lowest_one( bitvec const& a );

} // namespace dimin

template<>
struct std::hash<dimin::bitvec>
{
  std::size_t operator()( dimin::bitvec const& b ) const noexcept { return b.hash(); }
};
