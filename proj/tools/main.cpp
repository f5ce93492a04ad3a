#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Certify parameter-independent invariant subspaces of parameterized "
      "Hamiltonians, build the minimal exact reduced model, and compare "
      "full-order against reduced-order dynamics."};
  app.require_subcommand(1);

  qmor::cli::RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--model", cfg.model_file, "Model definition JSON file")
        ->check(CLI::ExistingFile);
    sub->add_option("--builtin", cfg.builtin,
                    "Built-in model: collective, tfim, or random-tfim")
        ->check(CLI::IsMember({"collective", "tfim", "random-tfim"}));
    sub->add_option("--n", cfg.n, "Site count for --builtin");
    sub->add_option("--tol", cfg.tol, "Independence / rank tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Output file (stdout when omitted)");
  };
  auto add_state = [&cfg](CLI::App* sub) {
    sub->add_option("--state", cfg.state_spec,
                    "Initial state: site labels like 0+1-, a repetition like "
                    "+^4, gs(v1,...), inline JSON, or @file.json");
  };
  auto add_method = [&cfg](CLI::App* sub) {
    sub->add_option("--method", cfg.method,
                    "Reduction route: burnside (dense monomials), pauli "
                    "(bit-level group), gramian (expectation-driven), or "
                    "snapshots (needs --schedule)")
        ->check(CLI::IsMember({"burnside", "pauli", "gramian", "snapshots"}))
        ->capture_default_str();
  };
  auto add_schedule = [&cfg](CLI::App* sub) {
    sub->add_option("--schedule", cfg.schedule_file,
                    "Sampling schedule JSON file")
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", cfg.seed,
                    "Default seed for schedule entries drawing random times")
        ->capture_default_str();
  };

  CLI::App* certify = app.add_subcommand(
      "certify",
      "Decide whether any proper invariant subspace exists for all parameter "
      "values (exit 0 yes / 1 no / 2 undecided)");
  add_common(certify);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Build the minimal invariant subspace containing the initial "
                "state and emit the exact projected model as JSON");
  add_common(reduce);
  add_state(reduce);
  add_method(reduce);
  add_schedule(reduce);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Propagate an observable along a time grid and emit CSV; "
                  "--compare also runs the reduced model");
  add_common(simulate);
  add_state(simulate);
  add_method(simulate);
  add_schedule(simulate);
  simulate->add_option("--lambda", cfg.lambda_spec,
                       "Parameter values, e.g. B=0.5,J=1 (unlisted are 0)");
  simulate->add_option("--times", cfg.times_spec,
                       "Comma list, or start:stop:count for an inclusive grid");
  simulate->add_option("--observable", cfg.observable,
                       "sum-x / sum-y / sum-z, inline JSON terms, or @file.json")
      ->capture_default_str();
  auto* compare_flag =
      simulate->add_flag("--compare", cfg.compare,
                         "Also run the reduced model and report the worst gap");
  simulate
      ->add_option("--truncate", cfg.truncate,
                   "Drop this many trailing subspace columns before comparing "
                   "(deliberately broken reduction)")
      ->needs(compare_flag);

  CLI::App* sample = app.add_subcommand(
      "sample", "Snapshot-based subspace discovery from a sampling schedule, "
                "with completeness diagnostics as JSON");
  add_common(sample);
  add_state(sample);
  add_schedule(sample);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  return qmor::cli::run(cfg);
}
