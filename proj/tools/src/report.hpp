#pragma once

#include <string>
#include <utility>
#include <vector>

namespace catcom::cli {

enum class Verdict { pass, fail, unknown };

enum class Format { text, structured };

// Exit codes of the command-line contract.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitInput = 3;

int exit_code(Verdict v);
const char* verdict_name(Verdict v);

// Outcome of one command. Fields keep insertion order. Witness values are
// single-line texts in the grammar of the corresponding input files.
struct Report {
  std::string verb;
  std::vector<std::string> inputs;
  std::string bounds;
  std::string seed;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::pair<std::string, std::string>> witnesses;
  // The exhausted bound of an unknown verdict.
  std::string bound;
  double millis = 0.0;
  Verdict verdict = Verdict::pass;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void witness(std::string key, std::string value) {
    witnesses.emplace_back(std::move(key), std::move(value));
  }
  void fail() { verdict = Verdict::fail; }
  void unknown(std::string exhausted) {
    verdict = Verdict::unknown;
    bound = std::move(exhausted);
  }
};

// Structured mode: "key: value" lines in a fixed order ending with the
// verdict line, without timing, so identical runs give identical bytes.
// Text mode adds the elapsed time and aligns keys.
std::string render_report(const Report& r, Format format);

// Collapses a multi-line rendering onto one line; every grammar is
// whitespace-insensitive, so the result still parses.
std::string one_line(const std::string& text);

}  // namespace catcom::cli
