#include "commands.hpp"

#include <dimin/cover.hpp>
#include <dimin/errors.hpp>
#include <dimin/multi_output.hpp>
#include <dimin/oracle.hpp>
#include <dimin/pi_gen.hpp>
#include <dimin/pla_io.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace dimin::cli
{

namespace
{

pla_options to_pla_options( common_options const& c )
{
  return pla_options{ c.max_expand };
}

std::string join( std::vector<bitvec> const& v )
{
  std::string s = "{";
  for ( std::size_t i = 0; i < v.size(); ++i )
    s += ( i ? ", " : "" ) + v[i].to_string();
  return s + "}";
}

std::string join( std::vector<cube> const& v )
{
  std::string s = "{";
  for ( std::size_t i = 0; i < v.size(); ++i )
    s += ( i ? ", " : "" ) + v[i].to_string();
  return s + "}";
}

void print_trace( spi_trace const& t, std::ostream& os )
{
  auto const p = t.minterm.to_string();
  if ( t.empty_offset )
  {
    os << "S_OFF is empty\n";
    os << "S_PI(" << p << ") = " << join( t.primes ) << "\n";
    return;
  }

  os << "S_DM = {" << bitvec::ones( t.minterm.width() ).to_string() << "}\n";
  for ( std::size_t j = 0; j < t.sdm_steps.size(); ++j )
  {
    auto const& s = t.sdm_steps[j];
    os << "D_" << j + 1 << " = " << s.di.to_string() << "; S_DM = " << join( s.set_after ) << "  // C_" << j + 1 << "="
       << s.step.comparisons << ", A_" << j + 1 << "=" << s.step.absorptions << "\n";
  }
  os << "S_DM(" << p << ") = " << join( t.sdm.elements() ) << "  // C = " << t.sdm.comparisons() << "/"
     << t.sdm.folded() << " = " << std::fixed << std::setprecision( 2 ) << t.sdm.average_comparisons()
     << std::defaultfloat << "\n";

  os << "N_0 = {" << bitvec( t.minterm.width() ).to_string() << "}\n";
  for ( std::size_t j = 0; j < t.n_steps.size(); ++j )
  {
    auto const& s = t.n_steps[j];
    os << "D_" << j + 1 << " = " << s.di.to_string() << " -> M_" << j + 1 << " = " << join( s.m ) << "\n";
    os << "N_" << j + 1 << " = " << join( s.n_after ) << "\n";
  }
  os << "S_PI(" << p << ") = " << join( t.primes ) << "\n";
}

template<typename Fn>
int guarded( std::ostream& err, Fn&& fn )
{
  try
  {
    return fn();
  }
  catch ( inconsistent_function const& e )
  {
    err << "error: inconsistent function: " << e.what() << "\n";
    return inconsistent;
  }
  catch ( parse_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  catch ( size_guard_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  catch ( usage_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

pla_header header_of( pla_file const& pla )
{
  return { pla.num_inputs, pla.num_outputs, pla.input_labels, pla.output_labels };
}

/// Per-output direct covers joined into one tagged cover.
std::vector<tagged_cube> cover_outputs_separately( pla_file const& pla, common_options const& common, bool irredundant )
{
  std::vector<tagged_cube> all;
  for ( std::size_t j = 0; j < pla.num_outputs; ++j )
  {
    auto const f = to_logic_function( pla, j, to_pla_options( common ) );
    if ( f.on.empty() )
      continue;
    auto tag = bitvec( pla.num_outputs );
    tag.set( j );
    for ( auto const& c : direct_cover( f, { irredundant } ).cubes )
      all.push_back( { c, tag } );
  }
  return all;
}

} // namespace

int cmd_minimize( minimize_args const& args, std::ostream& out, std::ostream& err )
{
  return guarded( err, [&] {
    auto const pla = read_pla( args.input );
    auto const start = std::chrono::steady_clock::now();

    std::string text;
    std::size_t cubes = 0;
    bool verified = false;
    if ( pla.num_outputs == 1 )
    {
      auto const f = to_logic_function( pla, 0, to_pla_options( args.common ) );
      std::vector<cube> cover;
      if ( !f.on.empty() )
        cover = direct_cover( f, { args.irredundant } ).cubes;
      cubes = cover.size();
      verified = verify_cover( cover, f ).ok();
      text = write_pla( cover, header_of( pla ) );
    }
    else
    {
      auto const cover = args.multi ? edsa_minimize( to_multi_function( pla, to_pla_options( args.common ) ) ).cubes
                                    : cover_outputs_separately( pla, args.common, args.irredundant );
      cubes = cover.size();
      if ( pla.num_inputs <= args.common.max_expand )
        verified = verify_tagged_cover( cover, to_multi_function( pla, to_pla_options( args.common ) ) ).ok();
      text = write_pla( cover, header_of( pla ) );
    }
    auto const ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();

    if ( args.out )
    {
      std::ofstream os( *args.out, std::ios::binary );
      if ( !os )
        throw parse_error( "cannot write " + args.out->string() );
      os << text;
    }
    else
    {
      out << text;
    }
    err << pla.name << ": " << cubes << " cubes, " << std::fixed << std::setprecision( 3 ) << ms << " ms, "
        << ( verified ? "verified" : "NOT verified" ) << "\n";
    return verified ? ok : verification_failed;
  } );
}

int cmd_primes( primes_args const& args, std::ostream& out, std::ostream& err )
{
  return guarded( err, [&] {
    auto const pla = read_pla( args.input );
    if ( pla.num_outputs != 1 )
      throw parse_error( "primes expects a single-output function" );
    if ( args.minterm.size() != pla.num_inputs )
      throw parse_error( "minterm has " + std::to_string( args.minterm.size() ) + " bits, the function has " +
                         std::to_string( pla.num_inputs ) + " inputs" );
    auto const p = bitvec::from_string( args.minterm );
    auto const f = to_logic_function( pla, 0, to_pla_options( args.common ) );

    auto const t = generate_spi_traced( p, f.off );
    if ( args.trace )
      print_trace( t, out );
    for ( auto const& c : t.primes )
      out << c.to_string() << "\n";
    return ok;
  } );
}

int cmd_verify( verify_args const& args, std::ostream& out, std::ostream& err )
{
  return guarded( err, [&] {
    auto const pla = read_pla( args.input );
    auto const cover_pla = read_pla( args.cover );
    if ( pla.num_inputs != cover_pla.num_inputs || pla.num_outputs != cover_pla.num_outputs )
      throw parse_error( "cover dimensions do not match the function" );

    bool pass = true;
    if ( pla.num_outputs == 1 )
    {
      auto const f = to_logic_function( pla, 0, to_pla_options( args.common ) );
      std::vector<cube> cover;
      for ( auto const& l : cover_pla.lines )
        if ( l.output[0] == '1' )
          cover.push_back( l.input );
      auto const report = verify_cover( cover, f );
      out << report.to_string( cover, f );
      pass = report.ok();
      if ( f.num_inputs <= 20 )
      {
        auto const same = oracle::equivalent( cover, f.on, oracle::truth_table::from_function( f ) );
        out << "equivalence: " << ( same ? "ok" : "FAIL" ) << "\n";
        pass = pass && same;
      }
    }
    else
    {
      std::vector<tagged_cube> cover;
      for ( auto const& l : cover_pla.lines )
      {
        bitvec tag( cover_pla.num_outputs );
        for ( std::size_t j = 0; j < cover_pla.num_outputs; ++j )
          if ( cover_pla.out_char( l, j ) == '1' )
            tag.set( j );
        if ( tag.any() )
          cover.push_back( { l.input, tag } );
      }
      auto const report = verify_tagged_cover( cover, to_multi_function( pla, to_pla_options( args.common ) ) );
      out << report.to_string( cover );
      pass = report.ok();
    }
    out << ( pass ? "PASS" : "FAIL" ) << "\n";
    return pass ? ok : verification_failed;
  } );
}

bench_record bench_file( std::filesystem::path const& path, common_options const& common )
{
  bench_record r;
  r.name = path.stem().string();
  try
  {
    auto const pla = read_pla( path );
    r.n = pla.num_inputs;
    if ( pla.num_outputs == 1 )
    {
      auto const f = to_logic_function( pla, 0, to_pla_options( common ) );
      r.on = f.on.size();
      r.off = f.off.size();
      auto const start = std::chrono::steady_clock::now();
      r.cubes = f.on.empty() ? 0 : direct_cover( f ).cubes.size();
      r.ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
    }
    else
    {
      auto const mf = to_multi_function( pla, to_pla_options( common ) );
      r.on = build_tagged( mf ).size();
      r.off = static_cast<std::size_t>( std::count_if( mf.rows.begin(), mf.rows.end(), []( auto const& row ) {
        return std::find( row.values.begin(), row.values.end(), tri::zero ) != row.values.end();
      } ) );
      auto const start = std::chrono::steady_clock::now();
      r.cubes = edsa_minimize( mf ).cubes.size();
      r.ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
    }
  }
  catch ( std::exception const& e )
  {
    r.error = e.what();
  }
  return r;
}

std::string csv_header()
{
  return "name,n,on,off,cubes,ms";
}

std::string csv_row( bench_record const& r )
{
  std::ostringstream os;
  if ( !r.error.empty() )
  {
    auto note = r.error;
    std::replace( note.begin(), note.end(), ',', ';' );
    os << r.name << ",,,,,,error: " << note;
    return os.str();
  }
  os << r.name << ',' << r.n << ',' << r.on << ',' << r.off << ',' << r.cubes << ',' << std::fixed
     << std::setprecision( 3 ) << r.ms;
  return os.str();
}

int cmd_bench( bench_args const& args, std::ostream& out, std::ostream& err )
{
  std::error_code ec;
  if ( !std::filesystem::is_directory( args.dir, ec ) )
  {
    err << "error: not a directory: " << args.dir.string() << "\n";
    return input_error;
  }

  std::vector<std::filesystem::path> files;
  for ( auto const& entry : std::filesystem::directory_iterator( args.dir ) )
    if ( entry.is_regular_file() && entry.path().extension() == ".pla" )
      files.push_back( entry.path() );
  std::sort( files.begin(), files.end(),
             []( auto const& a, auto const& b ) { return a.filename().string() < b.filename().string(); } );

  std::vector<bench_record> records( files.size() );
  std::atomic<std::size_t> next{ 0 };
  auto worker = [&] {
    for ( std::size_t i = next++; i < files.size(); i = next++ )
      records[i] = bench_file( files[i], args.common );
  };
  auto const jobs = std::max<std::size_t>( 1, std::min( args.jobs, files.size() ) );
  std::vector<std::thread> pool;
  for ( std::size_t k = 1; k < jobs; ++k )
    pool.emplace_back( worker );
  worker();
  for ( auto& t : pool )
    t.join();

  std::ostringstream csv;
  csv << csv_header() << "\n";
  for ( auto const& r : records )
    csv << csv_row( r ) << "\n";

  if ( args.csv )
  {
    std::ofstream os( *args.csv, std::ios::binary );
    if ( !os )
    {
      err << "error: cannot write " << args.csv->string() << "\n";
      return input_error;
    }
    os << csv.str();
  }
  else
  {
    out << csv.str();
  }
  for ( auto const& r : records )
    if ( !r.error.empty() )
      err << "warning: " << r.name << ": " << r.error << "\n";
  return ok;
}

} // namespace dimin::cli
