#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmor/burnside.hpp"
#include "qmor/dynamics.hpp"
#include "qmor/model.hpp"
#include "qmor/reduction.hpp"
#include "qmor/sampling.hpp"

namespace qmor::io {

// Insertion-ordered so emitted documents keep a stable, readable field order.
using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);

// Model document: {"n": sites, "h0": [pauli...], "terms": [{"label": str,
// "paulis": [pauli...]}]} with pauli = {"coeff": real, "string": "XIZ.."}.
HamiltonianModel parse_model(const Json& doc);
Json model_json(const HamiltonianModel& model);

struct StateSpec {
  StateVector state;
  // Site labels when the state was given in product form; empty otherwise.
  // The expectation-driven reduction path needs the labels, not the vector.
  std::string product_labels;
};

// Accepts product labels ("0+1-"), a repetition shorthand ("+^4"),
// "gs(v1,v2,...)" for the ground state at the given parameter values, inline
// JSON, or @file.json.  JSON forms: {"product": "..."},
// {"ground_state": {"lambda": ...}}, {"amplitudes": [[re,im], ...]}.
StateSpec parse_state(const std::string& spec, const HamiltonianModel& model);

// "B=0.5,J=1" by label, or "1=0.5,2=1" by 1-based index; unlisted entries 0.
std::vector<double> parse_lambda(const std::string& spec,
                                 const std::vector<std::string>& labels);

// "a:b:k" for k evenly spaced points from a to b inclusive, or a comma list.
std::vector<double> parse_times(const std::string& spec);

// Schedule document: [{"lambda": {...}|[...], then one of "times": [...],
// "random": {"count","lo","hi","seed"?}, "uniform": {"start","step","count"}}].
// Random entries without an explicit seed use default_seed + entry index.
std::vector<ScheduleEntry> parse_schedule(const Json& doc,
                                          const std::vector<std::string>& labels,
                                          std::uint64_t default_seed = 0);

// "sum-x" / "sum-y" / "sum-z", or a JSON list of {"coeff","string"} terms
// (inline or @file.json).
Eigen::MatrixXcd parse_observable(const std::string& spec, const HamiltonianModel& model);

Json certificate_json(const CertificateReport& report);
Json matrix_json(const ComplexMatrix& m);   // rows of [re, im] pairs
Json vector_json(const StateVector& v);
ComplexMatrix parse_matrix(const Json& doc);

Json reduction_json(const ReductionMap& map, std::size_t basis_size,
                    const std::string& method, const ReducedModel& rm);

// time,value,model_kind rows, one block per trajectory, %.17g floats.
std::string trajectories_csv(const std::vector<Trajectory>& trajectories);

// Writes to the path, or to stdout when the path is empty.
void write_text(const std::string& out_path, const std::string& content);

}  // namespace qmor::io
