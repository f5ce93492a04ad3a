#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>

namespace qmor::io {

namespace {

PauliSum parse_pauli_sum(const Json& list, std::uint32_t n) {
  PauliSum sum(n);
  for (const auto& entry : list) {
    const double coeff = entry.at("coeff").get<double>();
    const auto label = entry.at("string").get<std::string>();
    sum.add(coeff, BinaryPauli::from_label(label));
  }
  return sum;
}

Json pauli_sum_json(const PauliSum& sum) {
  Json list = Json::array();
  for (const auto& [coeff, p] : sum.terms()) {
    list.push_back({{"coeff", coeff}, {"string", p.label()}});
  }
  return list;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) {
      throw std::invalid_argument("malformed number '" + token + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::vector<double> lambda_from_json(const Json& spec,
                                     const std::vector<std::string>& labels) {
  if (spec.is_array()) {
    const auto values = spec.get<std::vector<double>>();
    if (values.size() != labels.size()) {
      throw std::invalid_argument("expected " + std::to_string(labels.size()) +
                                  " parameter values, got " +
                                  std::to_string(values.size()));
    }
    return values;
  }
  if (!spec.is_object()) {
    throw std::invalid_argument("lambda must be an array or a label->value object");
  }
  std::vector<double> values(labels.size(), 0.0);
  for (const auto& [key, val] : spec.items()) {
    const auto it = std::find(labels.begin(), labels.end(), key);
    if (it == labels.end()) {
      throw std::invalid_argument("unknown parameter label '" + key + "'");
    }
    values[static_cast<std::size_t>(it - labels.begin())] = val.get<double>();
  }
  return values;
}

StateSpec state_from_json(const Json& doc, const HamiltonianModel& model) {
  if (doc.contains("product")) {
    const auto labels = doc.at("product").get<std::string>();
    return {product_state(labels), labels};
  }
  if (doc.contains("ground_state")) {
    const auto lambda =
        lambda_from_json(doc.at("ground_state").at("lambda"), model.labels());
    return {ground_state(model, lambda).state, ""};
  }
  if (doc.contains("amplitudes")) {
    const auto& list = doc.at("amplitudes");
    if (list.size() != model.dim()) {
      throw std::invalid_argument("amplitude count does not match model dimension");
    }
    StateVector v(static_cast<Eigen::Index>(list.size()));
    for (std::size_t k = 0; k < list.size(); ++k) {
      v(static_cast<Eigen::Index>(k)) =
          Complex(list[k].at(0).get<double>(), list[k].at(1).get<double>());
    }
    const double norm = v.norm();
    if (norm <= 0.0) throw std::invalid_argument("amplitudes have zero norm");
    return {v / norm, ""};
  }
  throw std::invalid_argument(
      "state object needs one of: product, ground_state, amplitudes");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return Json::parse(in);
}

HamiltonianModel parse_model(const Json& doc) {
  const auto n = doc.at("n").get<std::uint32_t>();
  PauliSum h0 = doc.contains("h0") ? parse_pauli_sum(doc.at("h0"), n) : PauliSum(n);

  std::vector<Term> terms;
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& term : doc.at("terms")) {
    const auto label = term.at("label").get<std::string>();
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate parameter label '" + label + "'");
    }
    labels.push_back(label);
    terms.emplace_back(parse_pauli_sum(term.at("paulis"), n));
  }
  return HamiltonianModel(Term(std::move(h0)), std::move(terms), std::move(labels), n);
}

Json model_json(const HamiltonianModel& model) {
  if (!model.pauli_representable() || !model.sites()) {
    throw std::invalid_argument("only spin models with Pauli-sum terms serialize");
  }
  Json doc;
  doc["n"] = *model.sites();
  doc["h0"] = model.h0().is_pauli() ? pauli_sum_json(model.h0().pauli_sum())
                                    : Json::array();
  Json terms = Json::array();
  for (std::size_t k = 0; k < model.parameters(); ++k) {
    terms.push_back({{"label", model.labels()[k]},
                     {"paulis", pauli_sum_json(model.term(k).pauli_sum())}});
  }
  doc["terms"] = std::move(terms);
  return doc;
}

StateSpec parse_state(const std::string& spec, const HamiltonianModel& model) {
  if (spec.empty()) throw std::invalid_argument("empty state spec");
  if (spec.front() == '@') return state_from_json(load_json_file(spec.substr(1)), model);
  if (spec.front() == '{') return state_from_json(Json::parse(spec), model);
  if (spec.rfind("gs(", 0) == 0 && spec.back() == ')') {
    const auto lambda = parse_double_list(spec.substr(3, spec.size() - 4));
    if (lambda.size() != model.parameters()) {
      throw std::invalid_argument("gs(...) needs " +
                                  std::to_string(model.parameters()) +
                                  " parameter values in model order");
    }
    return {ground_state(model, lambda).state, ""};
  }
  std::string labels;
  if (const auto caret = spec.find('^'); caret != std::string::npos) {
    if (caret != 1) {
      throw std::invalid_argument("repetition shorthand is one site label, '^', count");
    }
    const int count = std::stoi(spec.substr(2));
    if (count < 1) throw std::invalid_argument("repetition count must be positive");
    labels.assign(static_cast<std::size_t>(count), spec.front());
  } else {
    labels = spec;
  }
  StateVector state = product_state(labels);
  if (static_cast<std::size_t>(state.size()) != model.dim()) {
    throw std::invalid_argument("state has " + std::to_string(labels.size()) +
                                " sites but the model needs " +
                                std::to_string(model.sites().value_or(0)));
  }
  return {std::move(state), labels};
}

std::vector<double> parse_lambda(const std::string& spec,
                                 const std::vector<std::string>& labels) {
  std::vector<double> values(labels.size(), 0.0);
  if (spec.empty()) return values;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string token = spec.substr(pos, comma - pos);
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("expected key=value, got '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    const double value = std::stod(token.substr(eq + 1));
    const auto it = std::find(labels.begin(), labels.end(), key);
    if (it != labels.end()) {
      values[static_cast<std::size_t>(it - labels.begin())] = value;
    } else {
      std::size_t used = 0;
      const unsigned long index = std::stoul(key, &used);
      if (used != key.size() || index < 1 || index > labels.size()) {
        throw std::invalid_argument("unknown parameter '" + key + "'");
      }
      values[index - 1] = value;
    }
    pos = comma + 1;
  }
  return values;
}

std::vector<double> parse_times(const std::string& spec) {
  const std::size_t first = spec.find(':');
  if (first == std::string::npos) return parse_double_list(spec);
  const std::size_t second = spec.find(':', first + 1);
  if (second == std::string::npos) {
    throw std::invalid_argument("time range is start:stop:count");
  }
  const double start = std::stod(spec.substr(0, first));
  const double stop = std::stod(spec.substr(first + 1, second - first - 1));
  const long count = std::stol(spec.substr(second + 1));
  if (count < 1) throw std::invalid_argument("time range needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] =
        count == 1 ? start
                   : start + (stop - start) * static_cast<double>(k) /
                         static_cast<double>(count - 1);
  }
  return out;
}

std::vector<ScheduleEntry> parse_schedule(const Json& doc,
                                          const std::vector<std::string>& labels,
                                          std::uint64_t default_seed) {
  if (!doc.is_array()) throw std::invalid_argument("schedule must be a JSON array");
  std::vector<ScheduleEntry> out;
  for (const auto& item : doc) {
    ScheduleEntry entry;
    entry.lambda = lambda_from_json(item.at("lambda"), labels);
    if (item.contains("times")) {
      entry.times = item.at("times").get<std::vector<double>>();
    } else if (item.contains("random")) {
      const auto& r = item.at("random");
      const std::uint64_t seed = r.contains("seed")
                                     ? r.at("seed").get<std::uint64_t>()
                                     : default_seed + out.size();
      entry.times = random_times(r.at("count").get<std::size_t>(),
                                 r.at("lo").get<double>(), r.at("hi").get<double>(),
                                 seed);
    } else if (item.contains("uniform")) {
      const auto& u = item.at("uniform");
      entry.uniform = true;
      entry.dt = u.at("step").get<double>();
      entry.times = uniform_times(u.at("start").get<double>(), entry.dt,
                                  u.at("count").get<std::size_t>());
    } else {
      throw std::invalid_argument(
          "schedule entry needs one of: times, random, uniform");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Eigen::MatrixXcd parse_observable(const std::string& spec,
                                  const HamiltonianModel& model) {
  if (!model.sites()) {
    throw std::invalid_argument("observables need a spin model");
  }
  const std::uint32_t n = *model.sites();
  char letter = 0;
  if (spec == "sum-x") letter = 'X';
  if (spec == "sum-y") letter = 'Y';
  if (spec == "sum-z") letter = 'Z';
  if (letter != 0) {
    PauliSum sum(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      std::string label(n, 'I');
      label[j] = letter;
      sum.add(1.0, BinaryPauli::from_label(label));
    }
    return sum.dense();
  }
  Json doc;
  if (!spec.empty() && spec.front() == '@') {
    doc = load_json_file(spec.substr(1));
  } else if (!spec.empty() && spec.front() == '[') {
    doc = Json::parse(spec);
  } else {
    throw std::invalid_argument("observable must be sum-x, sum-y, sum-z, a JSON "
                                "list of {coeff, string}, or @file.json");
  }
  return parse_pauli_sum(doc, n).dense();
}

Json certificate_json(const CertificateReport& report) {
  Json doc;
  switch (report.verdict) {
    case CertificateReport::Verdict::reducible: doc["verdict"] = "reducible"; break;
    case CertificateReport::Verdict::irreducible: doc["verdict"] = "irreducible"; break;
    case CertificateReport::Verdict::unknown: doc["verdict"] = "unknown"; break;
  }
  doc["reducible"] = report.verdict == CertificateReport::Verdict::unknown
                         ? Json(nullptr)
                         : Json(report.reducible());
  doc["dim_full"] = report.dim_full;
  doc["dim_algebra"] =
      report.dim_algebra ? Json(*report.dim_algebra) : Json(nullptr);
  doc["method"] = report.method;
  doc["layers_used"] = report.layers_used;
  return doc;
}

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const StateVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back({v(i).real(), v(i).imag()});
  }
  return out;
}

ComplexMatrix parse_matrix(const Json& doc) {
  const auto rows = doc.size();
  if (rows == 0) return ComplexMatrix(0, 0);
  const auto cols = doc.at(0).size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = doc.at(i);
    if (row.size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Complex(row.at(j).at(0).get<double>(), row.at(j).at(1).get<double>());
    }
  }
  return m;
}

Json reduction_json(const ReductionMap& map, std::size_t basis_size,
                    const std::string& method, const ReducedModel& rm) {
  Json doc;
  doc["d"] = map.d();
  doc["r"] = map.r();
  doc["basis_size"] = basis_size;
  doc["method"] = method;
  doc["labels"] = rm.labels;
  doc["phi"] = matrix_json(map.phi);
  Json reduced;
  reduced["h0"] = matrix_json(rm.h0);
  Json terms = Json::array();
  for (const auto& t : rm.terms) terms.push_back(matrix_json(t));
  reduced["terms"] = std::move(terms);
  reduced["v0"] = vector_json(rm.v0);
  doc["reduced"] = std::move(reduced);
  return doc;
}

std::string trajectories_csv(const std::vector<Trajectory>& trajectories) {
  std::string out = "time,value,model_kind\n";
  for (const auto& t : trajectories) {
    for (std::size_t k = 0; k < t.times.size(); ++k) {
      out += format_double(t.times[k]);
      out += ',';
      out += format_double(t.values[k]);
      out += ',';
      out += t.model_kind;
      out += '\n';
    }
  }
  return out;
}

void write_text(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << content;
}

}  // namespace qmor::io
