#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rbf/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact moments and extremal bounds for symmetric bilinear forms"};
  app.require_subcommand(1);

  // bound
  std::string problem_path;
  bool want_sup = false;
  bool want_inf = false;
  auto* bound = app.add_subcommand(
      "bound", "Evaluate the closed-form bound for a problem file");
  bound->add_option("problem", problem_path, "Path to an rbf-v1 problem file")
      ->required();
  bound->add_flag("--sup", want_sup, "Evaluate the supremum");
  bound->add_flag("--inf", want_inf, "Evaluate the infimum");

  // constant
  rbf::cli::ConstantArgs cargs;
  auto* constant = app.add_subcommand(
      "constant", "Best constants for fourth-to-seventh moment inequalities");
  constant->add_option("--which", cargs.which,
                       "Which constant: B4, B5, B6, B7 (or all with --table)");
  constant->add_option("--t", cargs.t, "Moment order (> 2)");
  constant->add_option("--n", cargs.n, "Number of variables (>= 2)");
  constant->add_flag("--table", cargs.table,
                     "Emit a table over --t-list x --n-list");
  constant->add_option("--t-list", cargs.t_list,
                       "Moment orders for --table");
  constant->add_option("--n-list", cargs.n_list,
                       "Variable counts for --table");
  constant->add_option("--format", cargs.format,
                       "Output format: structured (default) or csv");

  // verify
  rbf::cli::VerifyArgs vargs;
  auto* verify = app.add_subcommand(
      "verify", "Run a randomized verification suite");
  verify
      ->add_option("--suite", vargs.suite,
                   "Suite: lemma1..lemma4, extremality, convergence, "
                   "rosenthal")
      ->required();
  verify->add_option("--seed", vargs.seed, "Base seed (default 1)");
  verify->add_option("--trials", vargs.trials,
                     "Trials per configuration (0 = suite default)");
  verify->add_option("--out", vargs.out_path,
                     "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rbf::cli::exit_usage;
  }

  if (bound->parsed()) {
    if (want_sup == want_inf) {
      std::cerr << "error: pass exactly one of --sup or --inf\n";
      return rbf::cli::exit_usage;
    }
    return rbf::cli::cmd_bound(problem_path, want_sup, std::cout, std::cerr);
  }
  if (constant->parsed()) {
    return rbf::cli::cmd_constant(cargs, std::cout, std::cerr);
  }
  return rbf::cli::cmd_verify(vargs, std::cout, std::cerr);
}
