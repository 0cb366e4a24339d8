#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dimin::cli
{

enum exit_code : int
{
  ok = 0,
  verification_failed = 1,
  input_error = 2,
  inconsistent = 3
};

struct common_options
{
  std::size_t max_expand = 16;
};

struct minimize_args
{
  std::filesystem::path input;
  std::optional<std::filesystem::path> out;
  bool multi = false;
  bool irredundant = false;
  common_options common;
};

struct primes_args
{
  std::filesystem::path input;
  std::string minterm;
  bool trace = false;
  common_options common;
};

struct verify_args
{
  std::filesystem::path input;
  std::filesystem::path cover;
  common_options common;
};

struct bench_args
{
  std::filesystem::path dir;
  std::optional<std::filesystem::path> csv;
  std::size_t jobs = 1;
  common_options common;
};

/// One row of the benchmark table.
struct bench_record
{
  std::string name;
  std::size_t n = 0;
  std::size_t on = 0;
  std::size_t off = 0;
  std::size_t cubes = 0;
  double ms = 0.0;
  std::string error;
};

int cmd_minimize( minimize_args const& args, std::ostream& out, std::ostream& err );
int cmd_primes( primes_args const& args, std::ostream& out, std::ostream& err );
int cmd_verify( verify_args const& args, std::ostream& out, std::ostream& err );
int cmd_bench( bench_args const& args, std::ostream& out, std::ostream& err );

/// Minimizes one PLA file and times the minimization call only.
bench_record bench_file( std::filesystem::path const& path, common_options const& common );

std::string csv_header();
std::string csv_row( bench_record const& r );

} // namespace dimin::cli
