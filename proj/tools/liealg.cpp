// liealg: characteristic series, radicals and theorem checks for Lie algebras
// given by rational structure constants.
//
// Exit codes: 0 success, 1 invalid algebra, 2 parse or usage error,
// 3 theorem violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liealg/algebra_file.hpp"
#include "liealg/catalog.hpp"
#include "liealg/oracle.hpp"
#include "liealg/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidAlgebra = 1;
constexpr int kUsage = 2;
constexpr int kViolation = 3;

struct LoadError {
  int code;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw LoadError{kUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

liealg::LieAlgebra load(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return liealg::parse_algebra(text);
  } catch (const liealg::ParseError& e) {
    std::cerr << path << ": parse error: " << e.what() << "\n";
    throw LoadError{kUsage};
  } catch (const liealg::InvalidAlgebra& e) {
    std::cerr << path << ": invalid algebra: " << e.what() << "\n";
    throw LoadError{kInvalidAlgebra};
  }
}

int run_analyze(const std::string& path, bool as_json) {
  const auto lie = load(path);
  const auto report = liealg::profile(lie);
  std::cout << (as_json ? liealg::render_profile_json(lie, report) : liealg::render_profile_text(lie, report));
  return kOk;
}

int run_verify(const std::string& path, std::size_t samples, std::uint64_t seed, bool as_json) {
  const auto lie = load(path);
  const auto report = liealg::oracle::verify_theorems(lie, samples, seed);
  std::cout << (as_json ? liealg::render_theorems_json(report, lie.labels())
                        : liealg::render_theorems_text(report, lie.labels()));
  return report.any_violated() ? kViolation : kOk;
}

int run_catalog(const std::string& name) {
  if (name.empty()) {
    for (const auto& n : liealg::catalog::list()) std::cout << n << "\n";
    return kOk;
  }
  try {
    const auto entry = liealg::catalog::get(name);
    std::cout << liealg::render_algebra(entry.algebra, entry.name + ": " + entry.description);
    return kOk;
  } catch (const liealg::catalog::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic series, perfect and near perfect radicals, and upper bounded ideals of Lie algebras"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  std::string entry_name;

  auto* analyze = app.add_subcommand("analyze", "Print series, radicals and classification flags");
  analyze->add_option("file", path, "Algebra file ('-' for stdin)")->required();
  analyze->add_flag("--json", as_json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Check the propositions on sampled ideals");
  verify->add_option("file", path, "Algebra file ('-' for stdin)")->required();
  verify->add_option("--samples", samples, "Random ideals to sample")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_flag("--json", as_json, "Machine-readable output");

  auto* catalog = app.add_subcommand("catalog", "List built-in algebras, or export one in file format");
  catalog->add_option("name", entry_name, "Entry to export");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(path, as_json);
    if (verify->parsed()) return run_verify(path, samples, seed, as_json);
    return run_catalog(entry_name);
  } catch (const LoadError& e) {
    return e.code;
  }
}
