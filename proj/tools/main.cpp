#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main( int argc, char** argv )
{
  using namespace dimin::cli;

  CLI::App app{ "dimin: two-level logic minimization with difference-indicator prime generation" };
  app.require_subcommand( 1 );
  app.fallthrough();

  common_options common;
  std::uint64_t seed = 0;
  app.add_option( "--max-expand", common.max_expand, "Largest input count for OFF-set derivation and truth tables" )
      ->capture_default_str();
  app.add_option( "--seed", seed, "Reserved" );

  minimize_args min_args;
  std::string min_out;
  auto* minimize = app.add_subcommand( "minimize", "Minimize a PLA file" );
  minimize->add_option( "input", min_args.input, "PLA file" )->required();
  minimize->add_option( "--out", min_out, "Write the cover here instead of stdout" );
  minimize->add_flag( "--multi", min_args.multi, "Minimize multiple outputs jointly with tags" );
  minimize->add_flag( "--irredundant", min_args.irredundant, "Drop redundant cubes after covering" );

  primes_args pr_args;
  auto* primes = app.add_subcommand( "primes", "List all prime implicants containing a minterm" );
  primes->add_option( "input", pr_args.input, "PLA file" )->required();
  primes->add_option( "--minterm", pr_args.minterm, "Minterm bits, leftmost is the first input" )->required();
  primes->add_flag( "--trace", pr_args.trace, "Print the construction steps" );

  verify_args ver_args;
  auto* verify = app.add_subcommand( "verify", "Check a cover against a function" );
  verify->add_option( "input", ver_args.input, "PLA file of the function" )->required();
  verify->add_option( "cover", ver_args.cover, "PLA file of the cover" )->required();

  bench_args b_args;
  std::string csv_out;
  auto* bench = app.add_subcommand( "bench", "Minimize every .pla file in a directory" );
  bench->add_option( "--dir", b_args.dir, "Directory of PLA files" )->required();
  bench->add_option( "--csv", csv_out, "Write the CSV here instead of stdout" );
  bench->add_option( "--jobs", b_args.jobs, "Worker threads" )->capture_default_str();

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const rc = app.exit( e );
    return rc == 0 ? ok : input_error;
  }

  if ( *minimize )
  {
    min_args.common = common;
    if ( !min_out.empty() )
      min_args.out = min_out;
    return cmd_minimize( min_args, std::cout, std::cerr );
  }
  if ( *primes )
  {
    pr_args.common = common;
    return cmd_primes( pr_args, std::cout, std::cerr );
  }
  if ( *verify )
  {
    ver_args.common = common;
    return cmd_verify( ver_args, std::cout, std::cerr );
  }
  b_args.common = common;
  if ( !csv_out.empty() )
    b_args.csv = csv_out;
  return cmd_bench( b_args, std::cout, std::cerr );
}
