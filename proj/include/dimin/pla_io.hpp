#pragma once

#include <dimin/cube.hpp>
#include <dimin/logic_function.hpp>
#include <dimin/multi_output.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dimin
{

enum class pla_type
{
  f,
  fr,
  fd,
  fdr
};

std::string_view to_string( pla_type t );

/// Syntactic content of an Espresso-style PLA file.
struct pla_file
{
  struct line
  {
    cube input;
    /// Output part as written, leftmost character is the highest output index.
    std::string output;
  };

  std::size_t num_inputs = 0;
  std::size_t num_outputs = 0;
  pla_type type = pla_type::fd;
  std::optional<std::size_t> declared_terms;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<line> lines;
  std::string name;

  /// Output-part character of output `j` on `l`.
  char out_char( line const& l, std::size_t j ) const { return l.output[num_outputs - 1 - j]; }
};

struct pla_options
{
  /// Largest input count for which an OFF-set is derived by complementation.
  std::size_t max_expand = 16;
};

/*! \brief Parses PLA text.
 *
 * Supports .i .o .p .ilb .ob .type (f, fr, fd, fdr; default fd) and .e/.end,
 * '#' comments and CRLF line ends.  Input characters are {0,1,-}, output
 * characters {0,1,-,~}.
 */
pla_file parse_pla( std::string_view text );

pla_file read_pla( std::filesystem::path const& path );

/*! \brief Single-output function of output `j`.
 *
 * Under f/fd the OFF-set is the complement of ON u DC, computed with
 * disjoint sharp; inputs wider than `max_expand` are refused.
 */
logic_function to_logic_function( pla_file const& pla, std::size_t j = 0, pla_options const& options = {} );

/// Truth table over minterms; n <= `max_expand`.
multi_function to_multi_function( pla_file const& pla, pla_options const& options = {} );

/// Disjoint complement of a cube list within `width` variables.
std::vector<cube> complement( std::span<cube const> cubes, std::size_t width );

struct pla_header
{
  std::size_t num_inputs = 0;
  std::size_t num_outputs = 1;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
};

/// Single-output cover as `.type fr`, one "<input> 1" line per cube.
std::string write_pla( std::span<cube const> cover, pla_header const& header );

/// Multiple-output cover as `.type f`; a 1 marks each output in the tag.
std::string write_pla( std::span<tagged_cube const> cover, pla_header const& header );

} // namespace dimin
