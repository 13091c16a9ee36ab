#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tensorcomplex/complexgraph.hpp"
#include "tensorcomplex/decompose.hpp"
#include "tensorcomplex/field_text.hpp"
#include "tensorcomplex/suites.hpp"

using namespace tensorcomplex;

namespace {

constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("TENSORCOMPLEX_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("TENSORCOMPLEX_SEED is not an unsigned integer: ") + env);
  }
}

TypedField read_field(const std::string& path) {
  try {
    return from_text(read_file(path));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of matrix-field differential complexes on polynomial fields"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run verification suites and print a report");
  std::string suite = "all", format = "json", out_path, input_path, operator_name;
  std::optional<std::uint64_t> seed;
  int degree = 3;
  std::size_t samples = 10;
  bool strict = false, timings = false;
  run->add_option("--suite", suite, "identities, cells, two-complex, derived-complexes, right-inverses, "
                                    "decompositions, pairings or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"identities", "cells", "two-complex", "derived-complexes", "right-inverses",
                             "decompositions", "pairings", "all"}));
  run->add_option("--seed", seed, "Base seed (default: TENSORCOMPLEX_SEED or 0)");
  run->add_option("--degree", degree, "Polynomial degree bound")->capture_default_str()->check(CLI::Range(0, 12));
  run->add_option("--samples", samples, "Random samples per case")->capture_default_str()->check(CLI::Range(1, 100000));
  run->add_option("--format", format, "json or markdown")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "markdown"}));
  run->add_flag("--strict-preconditions", strict, "Also enforce moment orthogonality preconditions");
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_flag("--timings", timings, "Include per-case durations");
  auto* input_opt = run->add_option("--input", input_path, "Field text file fed to --operator (right-inverses only)");
  run->add_option("--operator", operator_name, "Right inverse applied to --input, e.g. Dcc")->needs(input_opt);
  input_opt->needs("--operator");

  auto* dump = app.add_subcommand("dump-diagram", "Print the operator diagram");
  std::string flavor = "with-bc", dump_format = "json", dump_out;
  dump->add_option("--flavor", flavor, "with-bc or no-bc")
      ->capture_default_str()
      ->check(CLI::IsMember({"with-bc", "no-bc"}));
  dump->add_option("--format", dump_format, "json or markdown")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "markdown"}));
  dump->add_option("--out", dump_out, "Write here instead of stdout");

  auto* dec = app.add_subcommand("decompose", "Decompose a field and print its parts");
  std::string dec_kind, dec_input, dec_out;
  bool dec_short = false;
  dec->add_option("--kind", dec_kind, "cc, dd or cd")->required()->check(CLI::IsMember({"cc", "dd", "cd"}));
  dec->add_option("--input", dec_input, "Field text file")->required();
  dec->add_flag("--short", dec_short, "Use the shorter variant");
  dec->add_option("--out", dec_out, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) {
      auto parsed = parse_suite(suite);
      if (!parsed) throw ConfigError("unknown suite: " + suite);
      SuiteConfig config{*parsed, seed ? *seed : default_seed(), degree, samples, strict};
      Report report;
      if (!input_path.empty()) {
        if (*parsed != Suite::RightInverses) throw ConfigError("--input requires --suite right-inverses");
        auto id = parse_right_inverse(operator_name);
        if (!id) throw ConfigError("unknown right inverse: " + operator_name);
        report.config = config;
        report.cases.push_back(run_right_inverse_on(*id, read_field(input_path), RightInverseOptions{strict}));
      } else {
        report = run_suites(config);
      }
      write_output(format == "json" ? report_to_json(report, timings).dump(2) + "\n"
                                    : report_to_markdown(report, timings),
                   out_path);
      return report.exit_code();
    }
    if (*dump) {
      DiagramGraph g = build_diagram(*parse_flavor(flavor));
      write_output(dump_format == "json" ? diagram_to_json(g).dump(2) + "\n" : diagram_to_markdown(g), dump_out);
      return 0;
    }
    if (*dec) {
      TypedField f = read_field(dec_input);
      Decomposition d = decompose(f, *parse_decomposition_kind(dec_kind), dec_short);
      write_output(decomposition_to_text(d), dec_out);
      return d.exact() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}
