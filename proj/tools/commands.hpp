// Subcommand bodies of the flagmorse binary, callable from tests.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace flagmorse::cli {

struct Options {
  std::string family = "A";
  int rank = 3;
  std::string painted;
  std::string gamma;
  std::string delta = "auto";
  std::string field;
  long m = 0;
  long n = 0;
  bool special = false;
  std::string suite = "all";
  long trials = 1000;
  std::uint64_t seed = 42;
  int threads = 0;
  bool json = false;
  bool timing = false;
};

// Each returns the process exit status: 0 success, 1 failed check.
// Usage problems surface as flagmorse::Error exceptions.
int roots(const Options& o, std::ostream& out);
int chevalley(const Options& o, std::ostream& out);
int parabolic(const Options& o, std::ostream& out);
int ell(const Options& o, std::ostream& out);
int ell_table(const Options& o, std::ostream& out);
int index_bound(const Options& o, std::ostream& out);
int check(const Options& o, std::ostream& out);
int hessian(const Options& o, std::ostream& out);

// Parses argv and dispatches. Usage errors print to `err` and return 2.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace flagmorse::cli
