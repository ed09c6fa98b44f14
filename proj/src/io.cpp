#include "kipp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "kipp/harness.hpp"

namespace kipp {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw MalformedInput("complex entry must be [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ComplexMatrix& a) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) entries.push_back(to_json(a(i, k)));
  }
  return {{"dim", a.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw MalformedInput("matrix needs \"dim\" and \"entries\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw MalformedInput("\"dim\" must be a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(j["dim"].get<long long>());
  const Json& e = j["entries"];
  if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != n * n) {
    throw MalformedInput("\"entries\" must hold dim * dim = " + std::to_string(n * n) + " values");
  }
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) a(i, k) = complex_from_json(e[static_cast<std::size_t>(i * n + k)]);
  }
  if (!a.allFinite()) throw MalformedInput("non-finite entry");
  return a;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw MalformedInput(path.string() + ": " + err.what());
  }
  return matrix_from_json(j);
}

Json to_json(const HomoPoly3& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    if (t.c != 0.0) terms.push_back({{"x", t.i}, {"y", t.j}, {"z", t.k}, {"coeff", t.c}});
  }
  return {{"degree", p.degree()}, {"terms", std::move(terms)}, {"text", p.to_string()}};
}

Json to_json(const DiscFit& fit) {
  return {{"center", to_json(fit.center)},
          {"centerModulus", std::abs(fit.center)},
          {"radius", fit.radius},
          {"residual", fit.residual},
          {"circular", is_circular(fit)}};
}

Json to_json(const CurveComponent& c) {
  Json foci = Json::array();
  for (Complex f : c.foci) foci.push_back(to_json(f));
  Json j = {{"kind", to_string(c.kind)}, {"foci", std::move(foci)}, {"residual", c.residual}};
  switch (c.kind) {
    case CurveComponent::Kind::Ellipse:
      j["minorAxis"] = c.minor_axis;
      break;
    case CurveComponent::Kind::QuarticFlat:
      j["theta"] = c.theta;
      j["mu"] = c.mu;
      break;
    case CurveComponent::Kind::Unclassified:
      j["degree"] = c.residual_degree;
      break;
    case CurveComponent::Kind::Point:
      break;
  }
  j["factor"] = c.factor.to_string();
  return j;
}

Json to_json(const ConditionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j = {{"label", row.label},
              {"lhs", to_json(row.lhs)},
              {"rhs", to_json(row.rhs)},
              {"residual", row.residual}};
    if (row.predicate) j["margin"] = row.margin;
    rows.push_back(std::move(j));
  }
  return {{"theorem", r.theorem}, {"rows", std::move(rows)}, {"maxResidual", r.max_residual()}};
}

Json classification_json(const std::vector<CurveComponent>& components, const DiscFit& disc,
                         const std::vector<ConditionReport>& reports) {
  Json comps = Json::array();
  for (const auto& c : components) comps.push_back(to_json(c));
  Json reps = Json::array();
  for (const auto& r : reports) reps.push_back(to_json(r));
  return {{"components", std::move(comps)}, {"discFit", to_json(disc)}, {"reports", std::move(reps)}};
}

Json to_json(const TrialRecord& r) {
  return {{"index", r.index},
          {"seed", r.seed},
          {"generator", r.generator},
          {"params", Json::parse(r.params)},
          {"structured", r.structured},
          {"expectCircular", r.expect_circular},
          {"admitted", r.admitted},
          {"discFit", to_json(r.disc)},
          {"circular", r.circular},
          {"centerModulus", r.center_modulus},
          {"classification", r.classification},
          {"flatAnomaly", r.flat_anomaly},
          {"timestamp", r.timestamp}};
}

Json to_json(const CampaignConfig& c) {
  return {{"id", campaign_id(c)},
          {"nTrials", c.n_trials},
          {"seed", c.seed},
          {"kerDims", c.ker_dims},
          {"includeStructured", c.include_structured},
          {"tolDisc", c.tol_disc},
          {"tolCenter", c.tol_center},
          {"samples", c.samples},
          {"timestamp", kCampaignTimestamp}};
}

Json to_json(const CampaignSummary& s) {
  return {{"id", s.id},
          {"nTrials", s.n_trials},
          {"admitted", s.admitted},
          {"circular", s.circular},
          {"violations", s.violations},
          {"structured", s.structured},
          {"structuredMissed", s.structured_missed},
          {"flatAnomalies", s.flat_anomalies},
          {"maxCenterModulusCircular", s.max_center_circular},
          {"verdict", s.passed() ? "PASS" : "FAIL"}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace kipp
