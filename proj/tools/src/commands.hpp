#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace catcom::cli {

struct Options {
  std::size_t arity = 4;        // N
  std::size_t size = 3;         // K
  std::size_t depth = 5;        // D
  std::size_t model_bound = 4;  // B
  std::size_t word_len = 8;     // L
  bool size_set = false;
  bool depth_set = false;
  bool model_bound_set = false;
  std::vector<std::string> ops;
  std::string goal;
  std::string out;
  Format format = Format::text;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t count = 1000;
  bool check = false;
  bool left = false;
  bool right = false;
};

// Text written to --out: dumps, rendered presentations or generated files.
struct Artifact {
  std::string text;
  // gen writes one file per problem into the --out directory.
  std::vector<std::pair<std::string, std::string>> files;
};

using Command = Report (*)(const std::vector<std::string>& inputs, const Options& o,
                           Artifact& artifact);

struct VerbSpec {
  const char* name;
  const char* help;
  std::size_t min_inputs;
  std::size_t max_inputs;
  Command run;
};

const std::vector<VerbSpec>& verbs();

std::string bounds_line(const Options& o);

}  // namespace catcom::cli
