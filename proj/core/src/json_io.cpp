#include "affaut/json_io.hpp"

namespace affaut {

Json endo_json(const Endo& f) {
  Json j;
  j["n"] = f.n();
  j["ring"] = f.ring().tag();
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(c.str());
  j["components"] = comps;
  return j;
}

Json matrix_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    rows.push_back(r);
  }
  return rows;
}

Json scalar_vector_json(const std::vector<Scalar>& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(e.str());
  return arr;
}

Json tame_word_json(const TameWord& w) {
  Json j;
  j["field"] = w.field->tag();
  j["n"] = w.n;
  Json factors = Json::array();
  for (const auto& f : w.factors) {
    Json fj;
    if (f.kind == TameFactor::Kind::Affine) {
      fj["kind"] = "affine";
      fj["matrix"] = matrix_json(f.matrix);
      fj["shift"] = scalar_vector_json(f.shift);
    } else {
      fj["kind"] = "triangular";
      fj["scale"] = scalar_vector_json(f.scale);
      Json offs = Json::array();
      for (const auto& b : f.offset) offs.push_back(b.str());
      fj["offsets"] = offs;
    }
    factors.push_back(fj);
  }
  j["factors"] = factors;
  return j;
}

Json perm_rep_json(const PermRep& rep) {
  Json j;
  j["field"] = rep.field->tag();
  j["n"] = rep.n;
  j["points"] = rep.npoints;
  j["bijective"] = rep.bijective;
  if (rep.bijective) {
    Json ct = Json::array();
    for (const auto& [len, count] : rep.cycle_type) ct.push_back(Json::array({len, count}));
    j["cycle_type"] = ct;
    j["sign"] = rep.sign;
  } else {
    j["cycle_type"] = nullptr;
    j["sign"] = nullptr;
  }
  return j;
}

Json certificate_json(const DegenerationCertificate& cert) {
  Json j;
  j["input"] = endo_json(cert.input_family);
  j["slope"] = Json{{"a", cert.slope_a}, {"b", cert.slope_b}};
  j["witness"] = scalar_vector_json(cert.witness);
  if (cert.tau_direction)
    j["tau_direction"] = scalar_vector_json(*cert.tau_direction);
  else
    j["tau_direction"] = nullptr;
  j["family"] = endo_json(cert.family);
  j["limit"] = endo_json(cert.limit);
  j["limit_is_translation"] = cert.limit_is_translation;
  j["nontrivial"] = cert.nontrivial;
  Json checks = Json::array();
  for (const auto& s : cert.sample_checks)
    checks.push_back(Json{{"t0", s.t0.str()}, {"verified", s.verified}});
  j["sample_checks"] = checks;
  return j;
}

Json identity_report_json(const IdentityReport& report) {
  Json j;
  j["name"] = report.name;
  Json params;
  for (const auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = params;
  j["lhs"] = endo_json(report.lhs);
  j["rhs"] = endo_json(report.rhs);
  j["verdict"] = report.verdict;
  return j;
}

Json census_json(const CensusReport& report) {
  Json j;
  j["field"] = report.field->tag();
  j["n"] = report.n;
  Json lines = Json::array();
  for (const auto& line : report.lines) {
    Json lj;
    lj["family"] = line.family;
    lj["checked"] = line.checked;
    lj["all_even"] = line.all_even;
    lj["expected_all_even"] = line.expected_all_even;
    if (line.odd_witness)
      lj["odd_witness"] = *line.odd_witness;
    else
      lj["odd_witness"] = nullptr;
    lines.push_back(lj);
  }
  j["lines"] = lines;
  j["matches_expectation"] = report.matches_expectation;
  return j;
}

Json v_membership_json(const VMembership& m) {
  Json j;
  j["member"] = m.member;
  j["strata_used"] = m.strata_used;
  if (m.member) {
    Json combo = Json::array();
    for (const auto& [g, c] : m.combination)
      combo.push_back(Json{{"i", g.i}, {"j", g.j}, {"a", g.a}, {"b", g.b}, {"coeff", c}});
    j["combination"] = combo;
    j["remainder"] = nullptr;
  } else {
    j["combination"] = nullptr;
    j["remainder"] = m.remainder.str();
  }
  return j;
}

Json v_class_json(const VClass& c) {
  Json j;
  j["field"] = c.field->tag();
  j["representative"] = c.rep.str();
  j["nonzero"] = !c.is_zero();
  return j;
}

}  // namespace affaut
