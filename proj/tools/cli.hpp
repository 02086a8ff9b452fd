#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgor/field.hpp"
#include "qgor/simplicial_complex.hpp"

namespace qgor::cli {

enum class Command { Classify, Homology, Hochster, Liaison, Graph, Collapse };

struct CliConfig {
  Command command = Command::Classify;
  std::string input;
  FieldSpec field;
  bool json = false;
  std::size_t face_cap = kDefaultFaceCap;

  bool list_facets = false;                   // classify
  int serre_ell = 2;                          // hochster
  std::vector<std::size_t> facets_a;          // liaison, collapse; 1-based
  int t = 1;                                  // graph
  bool dot = false;                           // graph
  std::optional<std::vector<std::size_t>> remove;  // graph; 1-based
  std::vector<long long> forbid;              // collapse
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCapacity = 2;

/// Executes one command, writing the report to `out` and diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgor::cli
