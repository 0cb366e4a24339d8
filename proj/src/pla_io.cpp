#include <dimin/errors.hpp>
#include <dimin/pla_io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dimin
{

std::string_view to_string( pla_type t )
{
  switch ( t )
  {
  case pla_type::f:
    return "f";
  case pla_type::fr:
    return "fr";
  case pla_type::fd:
    return "fd";
  case pla_type::fdr:
    return "fdr";
  }
  return "?";
}

namespace
{

std::vector<std::string> split_words( std::string_view s )
{
  std::vector<std::string> words;
  std::istringstream is{ std::string( s ) };
  for ( std::string w; is >> w; )
    words.push_back( std::move( w ) );
  return words;
}

std::size_t parse_count( std::string const& word, std::size_t line_no )
{
  std::size_t value = 0;
  auto const* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars( word.data(), end, value );
  if ( ec != std::errc{} || ptr != end )
    throw parse_error( "expected a number, got \"" + word + "\"", line_no );
  return value;
}

bool has_dc_part( pla_type t )
{
  return t == pla_type::fd || t == pla_type::fdr;
}

bool has_off_part( pla_type t )
{
  return t == pla_type::fr || t == pla_type::fdr;
}

} // namespace

pla_file parse_pla( std::string_view text )
{
  pla_file pla;
  bool have_i = false, have_o = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    auto nl = text.find( '\n', pos );
    if ( nl == std::string_view::npos )
      nl = text.size();
    auto raw = text.substr( pos, nl - pos );
    pos = nl + 1;
    ++line_no;

    if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
      raw = raw.substr( 0, hash );
    auto const words = split_words( raw );
    if ( words.empty() )
      continue;

    auto const& head = words[0];
    if ( head[0] == '.' )
    {
      if ( head == ".e" || head == ".end" )
        break;
      auto need_arg = [&]( std::size_t count ) {
        if ( words.size() != count + 1 )
          throw parse_error( "malformed directive " + head, line_no );
      };
      if ( head == ".i" )
      {
        need_arg( 1 );
        pla.num_inputs = parse_count( words[1], line_no );
        if ( pla.num_inputs == 0 )
          throw parse_error( ".i must be positive", line_no );
        have_i = true;
      }
      else if ( head == ".o" )
      {
        need_arg( 1 );
        pla.num_outputs = parse_count( words[1], line_no );
        if ( pla.num_outputs == 0 )
          throw parse_error( ".o must be positive", line_no );
        have_o = true;
      }
      else if ( head == ".p" )
      {
        need_arg( 1 );
        pla.declared_terms = parse_count( words[1], line_no );
      }
      else if ( head == ".ilb" )
      {
        pla.input_labels.assign( words.begin() + 1, words.end() );
      }
      else if ( head == ".ob" )
      {
        pla.output_labels.assign( words.begin() + 1, words.end() );
      }
      else if ( head == ".type" )
      {
        need_arg( 1 );
        auto const& t = words[1];
        if ( t == "f" )
          pla.type = pla_type::f;
        else if ( t == "fr" )
          pla.type = pla_type::fr;
        else if ( t == "fd" )
          pla.type = pla_type::fd;
        else if ( t == "fdr" )
          pla.type = pla_type::fdr;
        else
          throw parse_error( "unsupported .type " + t, line_no );
      }
      else
      {
        throw parse_error( "unsupported directive " + head, line_no );
      }
      continue;
    }

    if ( !have_i || !have_o )
      throw parse_error( "cube line before .i and .o", line_no );

    std::string joined;
    for ( auto const& w : words )
      joined += w;
    joined.erase( std::remove( joined.begin(), joined.end(), '|' ), joined.end() );
    if ( joined.size() != pla.num_inputs + pla.num_outputs )
      throw parse_error( "cube line has " + std::to_string( joined.size() ) + " characters, expected " +
                             std::to_string( pla.num_inputs + pla.num_outputs ),
                         line_no );

    auto const in = joined.substr( 0, pla.num_inputs );
    auto out = joined.substr( pla.num_inputs );
    if ( in.find_first_not_of( "01-" ) != std::string::npos )
      throw parse_error( "illegal input part \"" + in + "\" (use 0, 1 or -)", line_no );
    if ( out.find_first_not_of( "01-~" ) != std::string::npos )
      throw parse_error( "illegal output part \"" + out + "\"", line_no );
    pla.lines.push_back( { cube::from_string( in ), std::move( out ) } );
  }

  if ( !have_i || !have_o )
    throw parse_error( "missing .i or .o declaration" );
  return pla;
}

pla_file read_pla( std::filesystem::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw parse_error( "cannot open " + path.string() );
  std::ostringstream buf;
  buf << in.rdbuf();
  auto pla = parse_pla( buf.str() );
  pla.name = path.stem().string();
  return pla;
}

std::vector<cube> complement( std::span<cube const> cubes, std::size_t width )
{
  std::vector<cube> result{ cube::universe( width ) };
  for ( auto const& c : cubes )
  {
    if ( c.is_empty() )
      continue;
    std::vector<cube> next;
    auto const care = c.care_mask();
    for ( auto const& r : result )
    {
      if ( !cube_intersects( r, c ) )
      {
        next.push_back( r );
        continue;
      }
      /* r # c: peel off one variable at a time where c is specified and r is free */
      auto piece_left = r.left();
      auto piece_right = r.right();
      auto const split = care & r.dc_mask();
      for ( std::size_t v = 0; v < width; ++v )
      {
        if ( !split.test_var( v ) )
          continue;
        auto const value = c.right().test_var( v );
        auto out_left = piece_left, out_right = piece_right;
        out_left.set_var( v, value );
        out_right.set_var( v, !value );
        next.emplace_back( std::move( out_left ), std::move( out_right ) );
        piece_left.set_var( v, !value );
        piece_right.set_var( v, value );
      }
    }
    result = std::move( next );
  }
  return result;
}

logic_function to_logic_function( pla_file const& pla, std::size_t j, pla_options const& options )
{
  if ( j >= pla.num_outputs )
    throw usage_error( "output index out of range" );

  logic_function f;
  f.num_inputs = pla.num_inputs;
  f.name = pla.name;
  for ( auto const& l : pla.lines )
  {
    switch ( pla.out_char( l, j ) )
    {
    case '1':
      f.on.push_back( l.input );
      break;
    case '0':
      if ( has_off_part( pla.type ) )
        f.off.push_back( l.input );
      break;
    case '-':
      if ( has_dc_part( pla.type ) )
        f.dc.push_back( l.input );
      break;
    default:
      break;
    }
  }

  if ( !has_off_part( pla.type ) )
  {
    if ( pla.num_inputs > options.max_expand )
      throw parse_error( "deriving the OFF-set of a " + std::to_string( pla.num_inputs ) +
                         "-input .type " + std::string( to_string( pla.type ) ) + " function exceeds --max-expand " +
                         std::to_string( options.max_expand ) + "; supply the OFF-set with .type fr or fdr" );
    std::vector<cube> care_true = f.on;
    care_true.insert( care_true.end(), f.dc.begin(), f.dc.end() );
    f.off = complement( care_true, pla.num_inputs );
  }
  return f;
}

multi_function to_multi_function( pla_file const& pla, pla_options const& options )
{
  if ( pla.num_inputs > options.max_expand )
    throw parse_error( "a truth table over " + std::to_string( pla.num_inputs ) + " inputs exceeds --max-expand " +
                       std::to_string( options.max_expand ) );

  auto const n = pla.num_inputs, m = pla.num_outputs;
  auto const size = std::size_t{ 1 } << n;
  enum : std::uint8_t
  {
    on_bit = 1,
    off_bit = 2,
    dc_bit = 4
  };
  std::vector<std::uint8_t> flags( size * m, 0 );

  for ( auto const& l : pla.lines )
  {
    for_each_minterm( l.input, [&]( bitvec const& mt ) {
      auto const idx = static_cast<std::size_t>( mt.to_uint() );
      for ( std::size_t j = 0; j < m; ++j )
      {
        switch ( pla.out_char( l, j ) )
        {
        case '1':
          flags[idx * m + j] |= on_bit;
          break;
        case '0':
          if ( has_off_part( pla.type ) )
            flags[idx * m + j] |= off_bit;
          break;
        case '-':
          if ( has_dc_part( pla.type ) )
            flags[idx * m + j] |= dc_bit;
          break;
        default:
          break;
        }
      }
    } );
  }

  multi_function f;
  f.num_inputs = n;
  f.num_outputs = m;
  f.name = pla.name;
  auto const unlisted = has_off_part( pla.type ) ? tri::dc : tri::zero;
  for ( std::size_t idx = 0; idx < size; ++idx )
  {
    multi_function::row r{ bitvec( n, idx ), std::vector<tri>( m, unlisted ) };
    bool any_care = false;
    for ( std::size_t j = 0; j < m; ++j )
    {
      auto const fl = flags[idx * m + j];
      if ( ( fl & on_bit ) && ( fl & off_bit ) )
        throw inconsistent_function( "minterm " + r.minterm.to_string() + " is both ON and OFF for output " +
                                     std::to_string( j ) );
      if ( fl & dc_bit )
        r.values[j] = tri::dc;
      else if ( fl & on_bit )
        r.values[j] = tri::one;
      else if ( fl & off_bit )
        r.values[j] = tri::zero;
      any_care = any_care || r.values[j] != tri::dc;
    }
    if ( any_care )
      f.rows.push_back( std::move( r ) );
  }
  return f;
}

namespace
{

void write_header( std::ostream& os, pla_header const& h, std::size_t terms, pla_type type )
{
  os << ".i " << h.num_inputs << "\n.o " << h.num_outputs << "\n";
  if ( !h.input_labels.empty() )
  {
    os << ".ilb";
    for ( auto const& l : h.input_labels )
      os << ' ' << l;
    os << "\n";
  }
  if ( !h.output_labels.empty() )
  {
    os << ".ob";
    for ( auto const& l : h.output_labels )
      os << ' ' << l;
    os << "\n";
  }
  os << ".type " << to_string( type ) << "\n.p " << terms << "\n";
}

} // namespace

std::string write_pla( std::span<cube const> cover, pla_header const& header )
{
  std::ostringstream os;
  write_header( os, header, cover.size(), pla_type::fr );
  for ( auto const& c : cover )
    os << c.to_string( '-' ) << ' ' << std::string( header.num_outputs, '1' ) << "\n";
  os << ".e\n";
  return os.str();
}

std::string write_pla( std::span<tagged_cube const> cover, pla_header const& header )
{
  std::ostringstream os;
  write_header( os, header, cover.size(), pla_type::f );
  for ( auto const& tc : cover )
  {
    std::string out( header.num_outputs, '0' );
    for ( std::size_t j = 0; j < header.num_outputs; ++j )
      if ( tc.tag.test( j ) )
        out[header.num_outputs - 1 - j] = '1';
    os << tc.c.to_string( '-' ) << ' ' << out << "\n";
  }
  os << ".e\n";
  return os.str();
}

} // namespace dimin
