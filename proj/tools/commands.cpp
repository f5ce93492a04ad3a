#include "commands.hpp"

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"
#include "qmor/burnside.hpp"
#include "qmor/dynamics.hpp"
#include "qmor/model.hpp"
#include "qmor/reduction.hpp"
#include "qmor/sampling.hpp"

namespace qmor::cli {
namespace {

HamiltonianModel load_model(const RunConfig& cfg) {
  const bool has_file = !cfg.model_file.empty();
  const bool has_builtin = !cfg.builtin.empty();
  if (has_file == has_builtin) {
    throw std::invalid_argument("give exactly one of --model or --builtin");
  }
  if (has_file) {
    return io::parse_model(io::load_json_file(cfg.model_file));
  }
  if (cfg.n == 0) {
    throw std::invalid_argument("--builtin needs --n (number of sites)");
  }
  return builtin_model(cfg.builtin, cfg.n);
}

io::StateSpec load_state(const RunConfig& cfg, const HamiltonianModel& model) {
  if (cfg.state_spec.empty()) {
    throw std::invalid_argument("this command needs --state");
  }
  return io::parse_state(cfg.state_spec, model);
}

std::vector<ScheduleEntry> load_schedule(const RunConfig& cfg,
                                         const HamiltonianModel& model) {
  if (cfg.schedule_file.empty()) {
    throw std::invalid_argument("this command needs --schedule");
  }
  return io::parse_schedule(io::load_json_file(cfg.schedule_file), model.labels(),
                            cfg.seed);
}

// Everything a reduction route produces beyond the map itself.
struct BuiltReduction {
  ReductionMap map;
  std::size_t basis_size = 0;
  // Pauli strings behind map columns; set only by the expectation route,
  // where they unlock the dense-free reduced-model assembly.
  std::vector<BinaryPauli> selected_paulis;
  std::optional<SnapshotReduction> snapshot_info;
};

BuiltReduction build_reduction(const RunConfig& cfg, const HamiltonianModel& model,
                               const io::StateSpec& spec) {
  BuiltReduction out;
  if (cfg.method == "burnside") {
    const CertifyOptions guard{};
    if (model.dim() > guard.max_dense_dim) {
      throw std::runtime_error(
          "dense monomial generation refused above dimension " +
          std::to_string(guard.max_dense_dim) +
          "; use --method pauli or --method gramian");
    }
    BurnsideOptions opts;
    opts.tol = cfg.tol;
    const BurnsideBasis basis = burnside_basis_dense(model.coeff_set(), opts);
    out.map = orbit_basis(basis, spec.state, cfg.tol);
    out.basis_size = basis.size();
  } else if (cfg.method == "pauli") {
    const BurnsideBasis basis =
        burnside_basis_pauli(over_parameterize(model).support_paulis());
    // Orbit assembly walks the whole group once per admitted column; past
    // this size the expectation-driven route is the only practical one.
    if (basis.size() * model.dim() > (std::size_t{1} << 26)) {
      throw std::runtime_error(
          "group algebra has " + std::to_string(basis.size()) +
          " elements; orbit assembly at this size is impractical -- use "
          "--method gramian with a product state");
    }
    out.map = orbit_basis(basis, spec.state, cfg.tol);
    out.basis_size = basis.size();
  } else if (cfg.method == "gramian") {
    if (!model.pure_pauli()) {
      throw std::runtime_error(
          "expectation-driven selection needs every parameter on its own "
          "Pauli string and no constant part; use --method pauli or "
          "--method burnside for this model");
    }
    if (spec.product_labels.empty()) {
      throw std::runtime_error(
          "expectation-driven selection needs a product state given as site "
          "labels (e.g. --state +^4)");
    }
    const BurnsideBasis basis = burnside_basis_pauli(model.support_paulis());
    GramianSelection sel = gramian_select(basis, spec.product_labels);
    out.basis_size = basis.size();
    out.selected_paulis.reserve(sel.selected.size());
    for (std::size_t idx : sel.selected) {
      out.selected_paulis.push_back(basis.pauli_elements.at(idx));
    }
    out.map = std::move(sel.map);
  } else if (cfg.method == "snapshots") {
    const auto schedule = load_schedule(cfg, model);
    SnapshotReduction snap =
        snapshot_reduction(model, spec.state, schedule, cfg.tol);
    out.basis_size = 1;  // psi0 seeds the pool
    for (const auto& entry : schedule) out.basis_size += entry.times.size();
    out.map = snap.map;
    out.snapshot_info = std::move(snap);
  } else {
    throw std::invalid_argument(
        "unknown --method '" + cfg.method +
        "' (choose burnside, pauli, gramian, or snapshots)");
  }
  return out;
}

ReducedModel project_model(const HamiltonianModel& model, const io::StateSpec& spec,
                           const BuiltReduction& br) {
  if (!br.selected_paulis.empty()) {
    return reduced_model_pauli(model, br.selected_paulis, spec.product_labels);
  }
  return reduced_model(model, br.map, spec.state);
}

int cmd_certify(const RunConfig& cfg) {
  const HamiltonianModel model = load_model(cfg);
  CertifyOptions opts;
  opts.burnside.tol = cfg.tol;
  const CertificateReport report = certify(model, opts);
  io::write_text(cfg.out, io::certificate_json(report).dump(2) + "\n");
  switch (report.verdict) {
    case CertificateReport::Verdict::reducible: return 0;
    case CertificateReport::Verdict::irreducible: return 1;
    case CertificateReport::Verdict::unknown: return 2;
  }
  return 2;
}

int cmd_reduce(const RunConfig& cfg) {
  const HamiltonianModel model = load_model(cfg);
  const io::StateSpec spec = load_state(cfg, model);
  const BuiltReduction br = build_reduction(cfg, model, spec);
  const ReducedModel rm = project_model(model, spec, br);
  io::Json doc = io::reduction_json(br.map, br.basis_size, cfg.method, rm);
  if (br.snapshot_info) {
    doc["cyclic_dims"] = br.snapshot_info->cyclic_dims;
    doc["uniform_valid"] = br.snapshot_info->uniform_valid;
    doc["residual"] = br.snapshot_info->residual;
    doc["residual_pass"] = br.snapshot_info->residual_pass;
  }
  io::write_text(cfg.out, doc.dump(2) + "\n");
  return 0;
}

int cmd_simulate(const RunConfig& cfg) {
  const HamiltonianModel model = load_model(cfg);
  const io::StateSpec spec = load_state(cfg, model);
  const std::vector<double> lambda = io::parse_lambda(cfg.lambda_spec, model.labels());
  if (cfg.times_spec.empty()) {
    throw std::invalid_argument("simulate needs --times");
  }
  const std::vector<double> times = io::parse_times(cfg.times_spec);
  const Eigen::MatrixXcd obs = io::parse_observable(cfg.observable, model);
  if (!cfg.compare) {
    if (cfg.truncate != 0) {
      throw std::invalid_argument("--truncate only applies with --compare");
    }
    Trajectory full;
    full.times = times;
    full.values = observable_trace(propagate_full(model, lambda, spec.state, times), obs);
    full.model_kind = "full";
    io::write_text(cfg.out, io::trajectories_csv({full}));
    return 0;
  }
  const BuiltReduction br = build_reduction(cfg, model, spec);
  const CompareResult res =
      compare(model, br.map, lambda, spec.state, obs, times, cfg.truncate);
  io::write_text(cfg.out, io::trajectories_csv({res.full, res.reduced}));
  std::fprintf(stderr, "max |full - reduced| = %.17g\n", res.max_abs_error);
  return 0;
}

int cmd_sample(const RunConfig& cfg) {
  const HamiltonianModel model = load_model(cfg);
  const io::StateSpec spec = load_state(cfg, model);
  const auto schedule = load_schedule(cfg, model);
  const SnapshotReduction snap =
      snapshot_reduction(model, spec.state, schedule, cfg.tol);
  io::Json doc;
  doc["d"] = snap.map.d();
  doc["r"] = snap.map.r();
  doc["cyclic_dims"] = snap.cyclic_dims;
  doc["uniform_valid"] = snap.uniform_valid;
  doc["residual"] = snap.residual;
  doc["residual_pass"] = snap.residual_pass;
  doc["phi"] = io::matrix_json(snap.map.phi);
  io::write_text(cfg.out, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int run(const RunConfig& config) {
  try {
    if (config.command == "certify") return cmd_certify(config);
    if (config.command == "reduce") return cmd_reduce(config);
    if (config.command == "simulate") return cmd_simulate(config);
    if (config.command == "sample") return cmd_sample(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace qmor::cli
