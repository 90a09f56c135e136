// Command-line front end: galois <group|resolvent|roots|fixed|verify> <poly> [flags]

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "galois/parser.hpp"
#include "galois/report.hpp"

namespace {

struct Settings {
  std::string poly;
  std::string subgroup;
  bool json = false;
  bool timings = false;
  std::string json_out;
  galois::RunOptions run;
};

void print_parse_error(const std::string& text, const galois::ParseError& e) {
  std::cerr << "parse error at offset " << e.offset() << ": " << e.message() << "\n";
  std::cerr << "  " << text << "\n  " << std::string(e.offset(), ' ') << "^\n";
}

int run(galois::Command command, Settings& s) {
  galois::RatPolynomial f;
  try {
    f = galois::parse_polynomial(s.poly);
  } catch (const galois::ParseError& e) {
    print_parse_error(s.poly, e);
    return 1;
  }
  if (command == galois::Command::Fixed) s.run.subgroup = s.subgroup;
  galois::RunReport report = galois::run_pipeline(f, s.run, s.poly);
  if (report.squarefree_reduced)
    std::cerr << "warning: input has repeated roots; using its squarefree part "
              << galois::to_string(report.squarefree, 'x') << "\n";

  const auto json = galois::report_json(report, s.timings);
  if (!s.json_out.empty()) {
    std::ofstream out(s.json_out);
    if (!out) throw galois::Error(galois::ErrorCode::InvalidInput, "cannot write " + s.json_out);
    out << json.dump(2) << "\n";
  }
  if (s.json)
    std::cout << json.dump(2) << "\n";
  else
    std::cout << galois::render_text(report, command, s.timings);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois groups of rational polynomials by the resolvent method"};
  app.name("galois");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_flag("--json", s.json, "Print the full report as JSON");
  app.add_option("--json-out", s.json_out, "Also write the JSON report to this file");
  app.add_flag("--timings", s.timings, "Include per-stage timings");
  app.add_option("--precision-bits", s.run.precision_bits, "Initial working precision in bits")
      ->check(CLI::Range(16, 1 << 20));
  app.add_option("--max-precision-bits", s.run.max_precision_bits, "Precision cap in bits")
      ->check(CLI::Range(16, 1 << 20));
  app.add_option("--max-weight", s.run.max_weight, "Largest weight tried for the resolvent")->check(CLI::PositiveNumber);
  app.add_option("--degree-limit", s.run.degree_limit, "Largest accepted degree")->check(CLI::IsMember({4, 5}));
  app.add_option("--seed", s.run.seed, "Seed for the verification samples");

  struct Sub {
    const char* name;
    const char* help;
    galois::Command command;
  };
  const Sub subs[] = {
      {"group", "Galois group name, order and elements", galois::Command::Group},
      {"resolvent", "Weights, resolvent F(v) and its factor G(v)", galois::Command::Resolvent},
      {"roots", "Root expressions R_k(v) modulo G(v)", galois::Command::Roots},
      {"fixed", "Subgroup resolvent alpha and its stabilizer", galois::Command::Fixed},
      {"verify", "Check properties I-IV", galois::Command::Verify},
  };
  std::optional<galois::Command> chosen;
  for (const auto& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    cmd->add_option("poly", s.poly, "Polynomial in x, e.g. \"x^4 - 10x^2 + 1\"")->required();
    if (sub.command == galois::Command::Fixed)
      cmd->add_option("--subgroup", s.subgroup, "Generators in cycle notation, e.g. \"(1 2)(3 4), (1 3)\"")
          ->required();
    if (sub.command == galois::Command::Verify)
      cmd->add_option("--samples", s.run.samples, "Random functions per property")->check(CLI::PositiveNumber);
    const galois::Command c = sub.command;
    cmd->callback([&chosen, c] { chosen = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    return run(*chosen, s);
  } catch (const galois::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return galois::exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
