#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dynmono/commands.hpp"

using namespace dynmono;

int main(int argc, char** argv) {
  CLI::App app{"Monogenicity of iterated quadratic polynomials"};
  app.require_subcommand(1);

  CommandOptions opts;
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the JSON report instead of text");
  app.add_option("--seed", opts.seed, "Seed for the factorization PRNG");
  app.add_option("--budget-factor", opts.budget_factor, "Scale the squarefree factoring budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opts.jobs, "Worker threads for scans")->check(CLI::Range(1u, 256u));

  std::string b, c, family, suite = "all";
  int n = 1;
  std::uint64_t p = 2;
  long a_min = 0, a_max = 0;
  bool verify = false;

  auto* analyze = app.add_subcommand("analyze", "Dynamical monogenicity report for x^2 + bx + c");
  analyze->add_option("b", b)->required();
  analyze->add_option("c", c)->required();
  analyze->add_option("--depth", opts.depth, "Levels N to certify")->check(CLI::PositiveNumber);
  analyze->add_option("--max-bits", opts.max_bits, "Bit cap on critical orbit values");

  auto* split2 = app.add_subcommand("split2", "Predicted splitting of 2 in Q(alpha_n)");
  split2->add_option("b", b)->required();
  split2->add_option("c", c)->required();
  split2->add_option("n", n)->required();
  split2->add_flag("--verify", verify, "Compare with the factorization of f^n mod 2");

  auto* oracle = app.add_subcommand("oracle", "Dedekind, Newton polygon and closed-form verdicts for f^n at p");
  oracle->add_option("b", b)->required();
  oracle->add_option("c", c)->required();
  oracle->add_option("n", n)->required();
  oracle->add_option("p", p)->required();

  auto* scan = app.add_subcommand("pcf-scan", "Scan one post-critically finite family over a range of a");
  scan->add_option("family", family, "f, g or h")->required();
  scan->add_option("a_min", a_min)->required();
  scan->add_option("a_max", a_max)->required();

  auto* factor2 = app.add_subcommand("factor2", "Factor f^n mod 2");
  factor2->add_option("b", b)->required();
  factor2->add_option("c", c)->required();
  factor2->add_option("n", n)->required();

  auto* checks = app.add_subcommand("check-identities", "Run identity suites");
  checks->add_option("--suite", suite, "lemma41, lemma42, orbit, chain, open-question or all");

  auto* repro = app.add_subcommand("repro", "Recompute the reference worked examples");

  // Negative integers are positional values, not options.
  app.allow_extras(false);
  for (auto* sub : {analyze, split2, oracle, scan, factor2, checks, repro}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  CommandOutcome out;
  if (*analyze) {
    out = cmd_analyze(b, c, opts);
  } else if (*split2) {
    out = cmd_split2(b, c, n, verify, opts);
  } else if (*oracle) {
    out = cmd_oracle(b, c, n, p, opts);
  } else if (*scan) {
    out = cmd_pcf_scan(family, a_min, a_max, opts);
  } else if (*factor2) {
    out = cmd_factor2(b, c, n, opts);
  } else if (*checks) {
    out = cmd_check_identities(suite, opts);
  } else if (*repro) {
    out = cmd_repro(opts);
  }

  const Json doc = out.doc.to_json();
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render_text(doc);
  }
  if (!out.doc.error.is_null()) std::cerr << "error: " << out.doc.error.at("message").get<std::string>() << "\n";
  return out.exit_code;
}
