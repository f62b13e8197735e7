#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace catcom::cli {

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return kExitPass;
    case Verdict::fail: return kExitFail;
    case Verdict::unknown: return kExitUnknown;
  }
  return kExitInput;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string one_line(const std::string& text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (c == '\n' || c == '\r' || c == '\t' || c == ' ') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::string render_report(const Report& r, Format format) {
  std::vector<std::pair<std::string, std::string>> lines;
  lines.emplace_back("verb", r.verb);
  for (const auto& in : r.inputs) lines.emplace_back("input", in);
  lines.emplace_back("bounds", r.bounds);
  if (!r.seed.empty()) lines.emplace_back("seed", r.seed);
  for (const auto& f : r.fields) lines.emplace_back(f.first, f.second);
  for (const auto& w : r.witnesses) lines.emplace_back(w.first, w.second);
  if (r.verdict == Verdict::unknown) lines.emplace_back("bound", r.bound);

  std::ostringstream out;
  if (format == Format::structured) {
    for (const auto& [k, v] : lines) out << k << ": " << v << '\n';
  } else {
    std::size_t width = 7;
    for (const auto& l : lines) width = std::max(width, l.first.size());
    for (const auto& [k, v] : lines)
      out << k << ':' << std::string(width - k.size() + 1, ' ') << v << '\n';
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f ms", r.millis);
    out << "time:" << std::string(width - 3, ' ') << ms << '\n';
  }
  out << "verdict: " << verdict_name(r.verdict) << '\n';
  return out.str();
}

}  // namespace catcom::cli
