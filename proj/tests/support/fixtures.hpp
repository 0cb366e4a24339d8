#pragma once

// Test-only helpers: worked-example fixtures, random functions and string-level
// minterm enumeration that does not go through the bit-plane code.

#include <dimin/cube.hpp>
#include <dimin/logic_function.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace dimin::test
{

inline std::vector<std::string> const five_var_on = { "00000", "00010", "00011", "01000", "01001", "01100", "01101",
                                                   "01110", "10000", "10010", "11000", "11010", "11110" };
inline std::vector<std::string> const five_var_off = { "00001", "00100", "00110", "01010", "01111", "10001",
                                                    "10011", "10100", "10101", "10110", "10111", "11001",
                                                    "11011", "11100", "11101", "11111" };

inline std::vector<cube> cubes( std::vector<std::string> const& texts )
{
  std::vector<cube> out;
  for ( auto const& t : texts )
    out.push_back( cube::from_string( t ) );
  return out;
}

inline std::vector<bitvec> bits( std::vector<std::string> const& texts )
{
  std::vector<bitvec> out;
  for ( auto const& t : texts )
    out.push_back( bitvec::from_string( t ) );
  return out;
}

inline std::vector<std::string> texts( std::vector<cube> const& cs )
{
  std::vector<std::string> out;
  for ( auto const& c : cs )
    out.push_back( c.to_string() );
  return out;
}

inline std::vector<std::string> texts( std::vector<bitvec> const& bs )
{
  std::vector<std::string> out;
  for ( auto const& b : bs )
    out.push_back( b.to_string() );
  return out;
}

inline std::set<std::string> text_set( std::vector<cube> const& cs )
{
  auto t = texts( cs );
  return { t.begin(), t.end() };
}

inline logic_function five_var_function()
{
  return { 5, cubes( five_var_on ), cubes( five_var_off ), {}, "five_var" };
}

/// All minterm strings of width n, in binary order.
inline std::vector<std::string> all_minterms( std::size_t n )
{
  std::vector<std::string> out;
  for ( std::size_t v = 0; v < ( std::size_t{ 1 } << n ); ++v )
  {
    std::string s( n, '0' );
    for ( std::size_t i = 0; i < n; ++i )
      if ( ( v >> ( n - 1 - i ) ) & 1u )
        s[i] = '1';
    out.push_back( s );
  }
  return out;
}

/// Character-wise membership test on cube text.
inline bool text_covers( std::string const& cube_text, std::string const& minterm )
{
  for ( std::size_t i = 0; i < minterm.size(); ++i )
    if ( cube_text[i] != 'x' && cube_text[i] != '-' && cube_text[i] != minterm[i] )
      return false;
  return true;
}

inline std::set<std::string> minterm_set( std::string const& cube_text )
{
  std::set<std::string> out;
  for ( auto const& m : all_minterms( cube_text.size() ) )
    if ( text_covers( cube_text, m ) )
      out.insert( m );
  return out;
}

/// All 3^n cube texts.
inline std::vector<std::string> all_cube_texts( std::size_t n )
{
  std::vector<std::string> out{ "" };
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::vector<std::string> next;
    for ( auto const& s : out )
      for ( char ch : { '0', '1', 'x' } )
        next.push_back( s + ch );
    out = std::move( next );
  }
  return out;
}

inline std::string random_cube_text( std::mt19937& rng, std::size_t n, double dc_prob )
{
  std::bernoulli_distribution dc( dc_prob ), one( 0.5 );
  std::string s( n, '0' );
  for ( auto& ch : s )
    ch = dc( rng ) ? 'x' : ( one( rng ) ? '1' : '0' );
  return s;
}

/*! Random single-output function over minterms: each minterm is ON, OFF or
 *  DC; at least one ON minterm is guaranteed. */
inline logic_function random_function( std::mt19937& rng, std::size_t n, double p_on = 0.4, double p_off = 0.4 )
{
  std::uniform_real_distribution<double> u( 0.0, 1.0 );
  logic_function f;
  f.num_inputs = n;
  for ( auto const& m : all_minterms( n ) )
  {
    auto const r = u( rng );
    if ( r < p_on )
      f.on.push_back( cube::from_string( m ) );
    else if ( r < p_on + p_off )
      f.off.push_back( cube::from_string( m ) );
    else
      f.dc.push_back( cube::from_string( m ) );
  }
  if ( f.on.empty() )
  {
    f.on.push_back( f.off.empty() ? f.dc.back() : f.off.back() );
    if ( !f.off.empty() && f.off.back() == f.on.back() )
      f.off.pop_back();
    else if ( !f.dc.empty() && f.dc.back() == f.on.back() )
      f.dc.pop_back();
  }
  std::shuffle( f.off.begin(), f.off.end(), rng );
  return f;
}

} // namespace dimin::test
