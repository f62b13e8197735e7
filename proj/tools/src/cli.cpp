#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>
#include <catcom/error.hpp>

#include "commands.hpp"
#include "loaders.hpp"

namespace catcom::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputFailure(path + ": cannot write file");
  f << text;
}

void write_artifact(const Options& o, const Artifact& art, const std::string& report) {
  if (o.out.empty()) return;
  if (!art.files.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.out, ec);
    if (ec) throw InputFailure(o.out + ": cannot create directory");
    for (const auto& [name, text] : art.files) write_file((std::filesystem::path(o.out) / name).string(), text);
    return;
  }
  write_file(o.out, art.text.empty() ? report : art.text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"catcom: commutativity checks for theories, operads and categories", "catcom"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string ops;

  for (const auto& v : verbs()) {
    auto* sub = app.add_subcommand(v.name, v.help);
    if (v.max_inputs > 0) {
      auto* in = sub->add_option("inputs", inputs, "Input files or builtin:NAME");
      in->expected(static_cast<int>(v.min_inputs), static_cast<int>(v.max_inputs));
      if (v.min_inputs > 0) in->required();
    }
    sub->add_option("--arity,-N", o.arity, "Arity bound N")->check(CLI::Range(1, 64));
    sub->add_option("--size,-K", o.size, "Carrier or truncation size K")->check(CLI::Range(0, 64));
    sub->add_option("--depth,-D", o.depth, "Term size bound D")->check(CLI::Range(1, 64));
    sub->add_option("--model-bound,-B", o.model_bound, "Largest refuting model B")->check(CLI::Range(1, 16));
    sub->add_option("--word-len,-L", o.word_len, "Word length bound L")->check(CLI::Range(0, 64));
    sub->add_option("--ops", ops, "Comma-separated selection");
    sub->add_option("--goal", o.goal, "Goal equation 'lhs = rhs'");
    sub->add_option("--out", o.out, "Write the dump (or the report) here");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--seed", o.seed, "Seed, recorded in the report");
    sub->add_option("--count", o.count, "Number of generated problems")->check(CLI::Range(1, 1000000));
    sub->add_flag("--check", o.check, "Decide the generated problems");
    auto* left = sub->add_flag("--left", o.left, "Graded: test the left commutation only");
    auto* right = sub->add_flag("--right", o.right, "Graded: test the right commutation only");
    left->excludes(right);
  }

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  const auto* sub = app.get_subcommands().front();
  const auto& spec = *std::find_if(verbs().begin(), verbs().end(),
                                   [&](const VerbSpec& v) { return sub->get_name() == v.name; });
  o.format = format == "structured" ? Format::structured : Format::text;
  o.size_set = sub->count("--size") > 0;
  o.depth_set = sub->count("--depth") > 0;
  o.model_bound_set = sub->count("--model-bound") > 0;
  o.seed_set = sub->count("--seed") > 0;
  if (!ops.empty()) {
    std::stringstream ss(ops);
    std::string item;
    while (std::getline(ss, item, ',')) o.ops.push_back(item);
  }

  try {
    Artifact art;
    const auto t0 = std::chrono::steady_clock::now();
    Report r = spec.run(inputs, o, art);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = render_report(r, o.format);
    out << text;
    write_artifact(o, art, text);
    return exit_code(r.verdict);
  } catch (const InputFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace catcom::cli
