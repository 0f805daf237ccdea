#include "affaut/cli.hpp"

#include <fstream>
#include <sstream>

#include "affaut/json_io.hpp"
#include "affaut/rng.hpp"

namespace affaut {

namespace {

std::string resolve_input(const std::string& raw) {
  if (raw.empty() || raw[0] != '@') return raw;
  std::ifstream in(raw.substr(1));
  require(in.good(), Errc::BadRequest, "cannot read input file " + raw.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool mentions_param(const std::string& text) {
  auto over = text.rfind("over");
  std::string body = over == std::string::npos ? text : text.substr(0, over);
  return body.find('t') != std::string::npos;
}

Endo parse_endo_input(const std::string& raw, const FieldPtr& field) {
  std::string text = resolve_input(raw);
  if (text.find("over") != std::string::npos) return parse_endo(text);
  RingKind kind = mentions_param(text) ? RingKind::PolyT : RingKind::None;
  return parse_endo(text, ring_over(field, kind));
}

std::vector<Scalar> parse_point(const std::string& raw, const FieldPtr& field) {
  std::vector<Scalar> out;
  std::string cur;
  std::stringstream ss(resolve_input(raw));
  while (std::getline(ss, cur, ',')) out.push_back(Scalar::parse(field, cur));
  require(!out.empty(), Errc::BadRequest, "empty point");
  return out;
}

std::vector<Scalar> sample_values(const Request& req, const FieldPtr& field) {
  std::vector<Scalar> out;
  if (req.samples.empty()) {
    out.push_back(Scalar::of_int(field, 1));
    out.push_back(Scalar::of_int(field, 2));
  } else {
    for (const auto& s : req.samples) out.push_back(Scalar::parse(field, s));
  }
  // over GF(2) the default sample 2 collapses to 0; drop zero samples
  std::vector<Scalar> nonzero;
  for (const auto& s : out)
    if (!s.is_zero()) nonzero.push_back(s);
  return nonzero;
}

void expect_inputs(const Request& req, std::size_t count) {
  require(req.inputs.size() == count, Errc::BadRequest,
          req.subcommand + " expects " + std::to_string(count) + " input(s), got " +
              std::to_string(req.inputs.size()));
}

// --- verify-identities helpers ---

Json identities_grid(const FieldPtr& field, bool* all_true) {
  require(field->is_finite(), Errc::BadRequest, "--grid needs a finite field");
  Json reports = Json::array();
  const unsigned q = field->cardinality();
  ParamRing ring = ring_over(field);

  for (int deg = 0; deg <= 3; ++deg)
    for (unsigned xi = 1; xi < q; ++xi) {
      MultiPoly mono = MultiPoly::variable(ring, 2, 2).pow(deg) * Scalar::of_index(field, xi);
      for (unsigned e = 0; e < q; ++e) {
        IdentityReport r = verify_translation_commutator(mono, {Scalar::of_index(field, e)});
        *all_true = *all_true && r.verdict;
        reports.push_back(identity_report_json(r));
      }
      for (unsigned a = 1; a < q; ++a) {
        IdentityReport r = verify_scaling_commutator(mono, {Scalar::of_index(field, a)});
        *all_true = *all_true && r.verdict;
        reports.push_back(identity_report_json(r));
      }
    }
  if (field->characteristic() == 2 && q >= 3) {
    for (unsigned th = 1; th < q; ++th)
      for (unsigned mu = 1; mu < q; ++mu)
        for (unsigned nu = 0; nu < q; ++nu) {
          IdentityReport r = verify_char2_elementary(Scalar::of_index(field, th),
                                                     Scalar::of_index(field, mu),
                                                     Scalar::of_index(field, nu));
          *all_true = *all_true && r.verdict;
          reports.push_back(identity_report_json(r));
        }
  }
  return reports;
}

Json identities_random(std::uint64_t seed, long long count, bool* all_true) {
  Rng rng(seed);
  const FieldPtr field = FieldDesc::rationals();
  Json reports = Json::array();
  for (long long k = 0; k < count; ++k) {
    int n = rng.coin() ? 2 : 3;
    ParamRing ring = ring_over(field);
    // random monomial in x2..xn of degree <= 5 with a small nonzero coefficient
    MultiPoly mono = MultiPoly::of_int(ring, n, 1);
    int total = 0;
    for (int i = 2; i <= n; ++i) {
      int e = static_cast<int>(rng.below(6));
      if (total + e > 5) e = 0;
      total += e;
      mono = mono * MultiPoly::variable(ring, n, i).pow(e);
    }
    long long coeff = rng.int_in(-9, 9);
    if (coeff == 0) coeff = 1;
    mono = mono * Scalar::of_int(field, coeff);

    if (rng.coin()) {
      std::vector<Scalar> eps;
      for (int i = 2; i <= n; ++i) eps.push_back(Scalar::of_int(field, rng.int_in(-9, 9)));
      IdentityReport r = verify_translation_commutator(mono, eps);
      *all_true = *all_true && r.verdict;
      reports.push_back(identity_report_json(r));
    } else {
      std::vector<Scalar> alpha;
      for (int i = 2; i <= n; ++i) {
        long long a = rng.int_in(-9, 9);
        if (a == 0) a = 2;
        alpha.push_back(Scalar::of_int(field, a));
      }
      IdentityReport r = verify_scaling_commutator(mono, alpha);
      *all_true = *all_true && r.verdict;
      reports.push_back(identity_report_json(r));
    }
  }
  return reports;
}

Json dispatch(const Request& req, int* exit_code) {
  const FieldPtr field = FieldDesc::parse(req.field_tag);
  Json out;
  out["subcommand"] = req.subcommand;
  *exit_code = 0;

  if (req.subcommand == "compose") {
    expect_inputs(req, 2);
    Endo f = parse_endo_input(req.inputs[0], field);
    Endo g = parse_endo_input(req.inputs[1], field);
    out["result"] = endo_json(compose(f, g));
  } else if (req.subcommand == "invert") {
    expect_inputs(req, 1);
    Endo f = parse_endo_input(req.inputs[0], field);
    Endo inv = formal_inverse(f);
    out["inverse"] = endo_json(inv);
    out["roundtrip"] = compose(inv, f).is_identity() && compose(f, inv).is_identity();
  } else if (req.subcommand == "jacobian") {
    expect_inputs(req, 1);
    Endo f = parse_endo_input(req.inputs[0], field);
    out["jacobian"] = jacobian(f).str();
  } else if (req.subcommand == "decompose") {
    expect_inputs(req, 1);
    Endo f = parse_endo_input(req.inputs[0], field);
    TameWord word = jvdk_decompose(f);
    out["word"] = tame_word_json(word);
    out["recomposes"] = word.evaluate() == f;
  } else if (req.subcommand == "degenerate") {
    expect_inputs(req, 1);
    Endo g = parse_endo_input(req.inputs[0], field);
    std::vector<Scalar> samples = sample_values(req, field);
    DegenerationCertificate cert =
        req.pipeline ? commutator_pipeline(g, samples)
                     : degeneration_certificate(g, samples, req.grid);
    out["certificate"] = certificate_json(cert);
  } else if (req.subcommand == "alexander") {
    expect_inputs(req, 1);
    Endo f = parse_endo_input(req.inputs[0], field);
    Endo family = alexander_family(f);
    out["family"] = endo_json(family);
    out["at_zero"] = endo_json(family.specialize_t(Scalar::zero(field)));
    out["at_one"] = endo_json(family.specialize_t(Scalar::one(field)));
  } else if (req.subcommand == "sln-extract") {
    expect_inputs(req, 1);
    Endo h = parse_endo_input(req.inputs[0], field);
    require(!req.point_p.empty() && !req.point_q.empty(), Errc::BadRequest,
            "sln-extract needs --p and --q points");
    SlnExtraction ex = sln_extraction(h, parse_point(req.point_p, field),
                                      parse_point(req.point_q, field));
    out["commutator"] = endo_json(ex.commutator);
    out["family"] = endo_json(ex.family);
    out["limit_matrix"] = matrix_json(ex.limit);
  } else if (req.subcommand == "sign") {
    expect_inputs(req, 1);
    Endo f = parse_endo_input(req.inputs[0], field);
    out["action"] = perm_rep_json(permutation_of(f));
  } else if (req.subcommand == "census") {
    expect_inputs(req, 0);
    require(req.dimension.has_value(), Errc::BadRequest, "census needs a dimension (-n)");
    CensusReport report = even_action_census(field, *req.dimension);
    out["census"] = census_json(report);
    if (!report.matches_expectation) *exit_code = 1;
  } else if (req.subcommand == "rho") {
    expect_inputs(req, 1);
    Endo f = parse_endo_input(req.inputs[0], field);
    out["class"] = v_class_json(rho(f, req.mod_linear));
  } else if (req.subcommand == "vmember") {
    expect_inputs(req, 1);
    MultiPoly s = parse_poly(resolve_input(req.inputs[0]), ring_over(field), 1);
    VMembership m = v_membership(s, req.stratum);
    out["vmember"] = v_membership_json(m);
    if (!m.member) *exit_code = 1;
  } else if (req.subcommand == "verify-identities") {
    bool all_true = true;
    if (req.grid_mode) {
      out["reports"] = identities_grid(field, &all_true);
    } else {
      require(req.random_n.has_value(), Errc::BadRequest,
              "verify-identities needs --grid or --random N");
      require(req.seed.has_value(), Errc::BadRequest, "--random needs an explicit --seed");
      out["reports"] = identities_random(*req.seed, *req.random_n, &all_true);
    }
    out["all_true"] = all_true;
    if (!all_true) *exit_code = 1;
  } else if (req.subcommand == "nagata") {
    Scalar alpha = Scalar::parse(field, req.alpha.empty() ? "1" : req.alpha);
    Scalar beta = Scalar::parse(field, req.beta.empty() ? "2" : req.beta);
    Scalar u = Scalar::parse(field, req.u.empty() ? "2" : req.u);
    bool all_true = true;
    Json reports = Json::array();
    for (const auto& r : nagata_suite(alpha, beta, u)) {
      all_true = all_true && r.verdict;
      reports.push_back(identity_report_json(r));
    }
    out["reports"] = reports;
    out["all_true"] = all_true;
    if (!all_true) *exit_code = 1;
  } else {
    raise(Errc::BadRequest, "unknown subcommand: " + req.subcommand);
  }
  return out;
}

}  // namespace

Response run(const Request& request) {
  Json body;
  int exit_code = 0;
  try {
    body = dispatch(request, &exit_code);
  } catch (const Error& e) {
    body = Json{};
    body["subcommand"] = request.subcommand;
    body["error"] = Json{{"kind", errc_name(e.code())}, {"message", e.what()}};
    exit_code = errc_is_input_error(e.code()) ? 2 : 1;
  }
  std::string text = request.pretty ? body.dump(2) : body.dump();
  text += "\n";
  return Response{text, exit_code};
}

}  // namespace affaut
