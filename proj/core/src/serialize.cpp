#include "qf/serialize.hpp"

#include <sstream>

namespace qf {

Json to_json(const Mat2& m) {
  auto pair = [](Complex z) { return Json::array({z.real(), z.imag()}); };
  return Json::array({pair(m.a), pair(m.b), pair(m.c), pair(m.d)});
}

Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("matrix JSON must be [[re,im] x4]");
  auto entry = [&](std::size_t i) {
    return Complex(j[i].at(0).get<double>(), j[i].at(1).get<double>());
  };
  return {entry(0), entry(1), entry(2), entry(3)};
}

Json to_json(const WitnessReport& report) {
  Json j;
  j["status"] = to_string(report.status);
  Json mats = Json::array();
  for (const Mat2& m : report.matrices) mats.push_back(to_json(m));
  j["matrices"] = mats;
  j["residual"] = report.residual;
  j["refutation"] = report.refutation;
  Json values = Json::object();
  for (const auto& [name, value] : report.solver_values) {
    values[name] = Json::array({value.real(), value.imag()});
  }
  j["solver_values"] = values;
  j["exact_checked"] = report.exact_checked;
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j;
  j["ok"] = report.ok();
  j["structural_error"] = report.structural_error ? Json(*report.structural_error) : Json(nullptr);
  Json violations = Json::array();
  for (const AxiomViolation& v : report.violations) {
    violations.push_back({{"axiom", v.axiom}, {"x", v.x}, {"y", v.y}, {"z", v.z}});
  }
  j["violations"] = violations;
  return j;
}

Json to_json(const IsoResult& result) {
  Json j;
  switch (result.outcome) {
    case IsoResult::Outcome::Found: j["outcome"] = "found"; break;
    case IsoResult::Outcome::NotFound: j["outcome"] = "not-found"; break;
    case IsoResult::Outcome::Inconclusive: j["outcome"] = "inconclusive"; break;
  }
  j["found"] = result.found();
  j["mapping"] = result.mapping;
  j["nodes_explored"] = result.nodes_explored;
  return j;
}

Json analysis_report(const QuandleTable& t) {
  Json j;
  j["name"] = t.name();
  j["size"] = t.size();
  j["latin"] = is_latin(t, LatinMode::Oracle);
  OrbitInfo info = orbits(t);
  j["orbits"] = info.blocks.size();
  ConnectivityReport conn = connectivity_degree(t);
  j["degree"] = conn.degree ? Json(*conn.degree) : Json(nullptr);
  j["type"] = type_of(t);
  j["rank"] = info.abelianization_rank;
  return j;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

namespace {

std::string scalar_to_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

std::string json_to_csv(const Json& j) {
  std::ostringstream header, row;
  bool first = true;
  if (!j.is_object()) return scalar_to_string(j) + "\n";
  for (const auto& [key, value] : j.items()) {
    if (!first) {
      header << ',';
      row << ',';
    }
    first = false;
    header << csv_escape(key);
    row << csv_escape(scalar_to_string(value));
  }
  return header.str() + "\n" + row.str() + "\n";
}

std::string json_to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qf
