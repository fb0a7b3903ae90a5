#pragma once

#include <string>
#include <vector>

namespace szmap {

struct RunConfig {
  enum class Command { compute, hin, hom, verify, diagram };
  enum class Format { text, json, dot, tikz };

  Command command = Command::compute;
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<int> sequence;
  std::vector<int> subset;
  int max_n = 6;
  Format format = Format::text;
  std::string output_path;  // empty writes to stdout

  char family = 'c';          // hom/diagram
  int nerve_level = -1;       // hom: < 0 lists elements, >= 0 lists chains
  bool nondegenerate_only = false;
  bool descending = false;    // print chains top-down
};

struct RunResult {
  int exit_code = 0;
  std::string document;
};

// Validates the config against the module invariants and produces the
// requested document. Throws std::invalid_argument naming the violated
// invariant; verify returns exit code 1 iff the report has mismatches.
RunResult run(const RunConfig& config);

constexpr int kSchemaVersion = 1;
constexpr const char* kMaxNEnvVar = "SZMAP_MAX_N";

}  // namespace szmap
