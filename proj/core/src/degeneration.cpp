#include "affaut/degeneration.hpp"

#include <numeric>

#include "affaut/tame.hpp"

namespace affaut {

namespace {

void check_family_input(const Endo& g) {
  require(g.ring().kind == RingKind::PolyT, Errc::RingMismatch,
          "expected a family over k[t], got " + g.ring().tag());
  require(!g.is_identity(), Errc::IdentityInput, "the identity family has no slope");
  require(g.specialize_t(Scalar::zero(g.ring().base)).is_identity(), Errc::NotIdAtZero,
          "family does not specialize to the identity at t = 0");
}

// bigraded parts of g_i - x_i for all i, as (i, j, m) -> q_{i,j,m}
struct Parts {
  // key: (t-degree j, x-degree m); separate per component
  std::vector<std::map<std::pair<int, int>, MultiPoly>> per_component;
};

Parts family_parts(const Endo& g) {
  Parts parts;
  for (int i = 1; i <= g.n(); ++i) {
    MultiPoly d = g.component(i) - MultiPoly::variable(g.ring(), g.n(), i);
    parts.per_component.push_back(d.bigraded_parts());
  }
  return parts;
}

// translation by Laurent monomials c_i * t^e
Endo laurent_translation(const ParamRing& ring, int n, const std::vector<Scalar>& c, int t_exp,
                         bool negate) {
  std::vector<MultiPoly> comps;
  for (int i = 1; i <= n; ++i) {
    MultiPoly shift(ring, n);
    Scalar coeff = negate ? -c[static_cast<std::size_t>(i - 1)] : c[static_cast<std::size_t>(i - 1)];
    shift.add_term(Monomial{t_exp, std::vector<int>(static_cast<std::size_t>(n), 0)}, coeff);
    comps.push_back(MultiPoly::variable(ring, n, i) + shift);
  }
  return Endo(ring, std::move(comps));
}

}  // namespace

std::pair<long long, long long> slope(const Endo& g) {
  check_family_input(g);
  Parts parts = family_parts(g);
  long long best_m = 0, best_j = 1;
  bool found = false;
  for (const auto& comp : parts.per_component)
    for (const auto& [key, poly] : comp) {
      auto [j, m] = key;
      require(j >= 1, Errc::NotIdAtZero, "t-free part survived the t = 0 check");
      if (!found || static_cast<long long>(m) * best_j > best_m * static_cast<long long>(j)) {
        best_m = m;
        best_j = j;
        found = true;
      }
    }
  require(found, Errc::IdentityInput, "no nonzero parts");
  if (best_m == 0) return {0, 1};  // already a translation family
  long long d = std::gcd(best_m, best_j);
  return {best_m / d, best_j / d};
}

std::pair<Endo, Endo> degenerate(const Endo& g, const std::vector<Scalar>& eps) {
  auto [a, b] = slope(g);
  require(static_cast<int>(eps.size()) == g.n(), Errc::DimensionMismatch,
          "witness dimension mismatch");
  if (a == 0) {
    // g is a family of translations; conjugation by any rho changes nothing
    return {g, g.specialize_t(Scalar::one(g.ring().base))};
  }

  ParamRing laurent = ring_over(g.ring().base, RingKind::LaurentT);
  Endo g_laurent = g.cast(RingKind::LaurentT);
  Endo g_ta = g_laurent.substitute_t(MultiPoly::param(laurent, g.n(), static_cast<int>(a)));
  Endo rho = laurent_translation(laurent, g.n(), eps, -static_cast<int>(b), false);
  Endo rho_inv = laurent_translation(laurent, g.n(), eps, -static_cast<int>(b), true);

  Endo h_laurent = compose(rho_inv, compose(g_ta, rho));
  for (const auto& c : h_laurent.components())
    require(c.min_t_exp() >= 0, Errc::NegativeTPower,
            "internal invariant failed: negative t-power in the conjugated family");
  Endo h = h_laurent.cast(RingKind::PolyT);
  Endo limit = h.specialize_t(Scalar::zero(g.ring().base));
  require(limit.is_translation(), Errc::Internal, "limit is not a translation");
  return {h, limit};
}

std::vector<Scalar> find_witness(const Endo& g, std::optional<long long> grid_height) {
  require(g.ring().base->is_rational(), Errc::FieldMismatch,
          "witness search needs an infinite base field; use QQ");
  auto [a, b] = slope(g);
  require(a >= 1, Errc::IsTranslation,
          "family of translations: every witness degenerates trivially");

  // P_i = sum of the slope-critical parts q_{i,j,m} with m/j = a/b
  Parts parts = family_parts(g);
  ParamRing base = ring_over(g.ring().base);
  std::vector<MultiPoly> critical;
  int max_deg = 0;
  for (int i = 0; i < g.n(); ++i) {
    MultiPoly p(base, g.n());
    for (const auto& [key, poly] : parts.per_component[static_cast<std::size_t>(i)]) {
      auto [j, m] = key;
      if (static_cast<long long>(m) * b == a * static_cast<long long>(j)) p = p + poly;
    }
    max_deg = std::max(max_deg, p.x_degree());
    critical.push_back(p);
  }

  long long height = grid_height.value_or(static_cast<long long>(max_deg) + 1);
  std::vector<long long> coords(static_cast<std::size_t>(g.n()), 0);
  while (true) {
    std::vector<Scalar> eps;
    for (long long c : coords) eps.push_back(Scalar::of_int(g.ring().base, c));
    for (const auto& p : critical)
      if (!p.evaluate(eps).is_zero()) return eps;
    // next tuple in ascending lexicographic order (last coordinate fastest)
    int k = g.n() - 1;
    while (k >= 0 && coords[static_cast<std::size_t>(k)] == height) {
      coords[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++coords[static_cast<std::size_t>(k)];
  }
  raise(Errc::NoWitness, "internal invariant failed: all slope-critical parts vanish on the grid");
}

std::optional<Endo> find_noncommuting_translation(const Endo& f) {
  require(!f.ring().has_param(), Errc::RingMismatch, "expected a parameter-free automorphism");
  require(f.ring().base->is_rational(), Errc::FieldMismatch,
          "the centraliser argument needs an infinite field; use QQ");
  if (f.is_translation()) return std::nullopt;
  const int n = f.n();
  int d = f.degree();
  for (int i = 1; i <= n; ++i)
    for (int c = 1; c <= d + 1; ++c) {
      std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar::zero(f.ring().base));
      v[static_cast<std::size_t>(i - 1)] = Scalar::of_int(f.ring().base, c);
      Endo tau = Endo::translation(f.ring(), v);
      if (compose(f, tau) != compose(tau, f)) return tau;
    }
  raise(Errc::Internal, "no coordinate translation failed to commute with a non-translation");
}

namespace {

DegenerationCertificate run_degeneration(const Endo& g,
                                         const std::optional<std::vector<Scalar>>& tau_dir,
                                         const Endo* f_for_samples,
                                         const std::vector<Scalar>& samples,
                                         std::optional<long long> grid_height) {
  DegenerationCertificate cert{g, 0, 1, {}, tau_dir, g, g, false, false, {}};
  auto [a, b] = slope(g);
  cert.slope_a = a;
  cert.slope_b = b;
  const FieldPtr field = g.ring().base;

  if (a == 0) {
    cert.witness.assign(static_cast<std::size_t>(g.n()), Scalar::zero(field));
    auto [h, limit] = degenerate(g, cert.witness);
    cert.family = h;
    cert.limit = limit;
  } else {
    cert.witness = find_witness(g, grid_height);
    auto [h, limit] = degenerate(g, cert.witness);
    cert.family = h;
    cert.limit = limit;
  }
  cert.limit_is_translation = cert.limit.is_translation();
  cert.nontrivial = !cert.limit.is_identity();

  const ParamRing base = ring_over(field);
  for (const Scalar& t0 : samples) {
    require(!t0.is_zero(), Errc::BadRequest, "sample parameters must be nonzero");
    // h carries t^a only on the conjugated path (a >= 1)
    Scalar t0a = a == 0 ? t0 : t0.pow(a);
    Endo lhs = cert.family.specialize_t(t0);
    Endo rhs = g.specialize_t(t0a);
    if (f_for_samples != nullptr) {
      // re-derive g(t0^a) as the direct commutator with tau(t0^a) over k
      const Endo& f = *f_for_samples;
      std::vector<Scalar> nu, neg_nu;
      for (const Scalar& c : *tau_dir) {
        nu.push_back(c * t0a);
        neg_nu.push_back(-(c * t0a));
      }
      Endo tau0 = Endo::translation(base, nu);
      Endo tau0_inv = Endo::translation(base, neg_nu);
      rhs = compose(tau0_inv, compose(formal_inverse(f), compose(tau0, f)));
    }
    if (a != 0) {
      std::vector<Scalar> shift, neg_shift;
      for (const Scalar& e : cert.witness) {
        Scalar s = e * t0.pow(-b);
        shift.push_back(s);
        neg_shift.push_back(-s);
      }
      Endo rho0 = Endo::translation(base, shift);
      Endo rho0_inv = Endo::translation(base, neg_shift);
      rhs = compose(rho0_inv, compose(rhs, rho0));
    }
    cert.sample_checks.push_back({t0, lhs == rhs});
  }
  return cert;
}

}  // namespace

DegenerationCertificate commutator_pipeline(const Endo& f, const std::vector<Scalar>& samples) {
  require(!f.ring().has_param(), Errc::RingMismatch, "pipeline input is parameter-free");
  MultiPoly jac = jacobian(f);
  require(jac.is_constant() && jac.constant_value().is_one(), Errc::JacobianNotOne,
          "pipeline input must have Jacobian 1");
  require(!f.is_translation(), Errc::IsTranslation,
          "translations commute with every translation; the pipeline is vacuous");

  auto tau_const = find_noncommuting_translation(f);
  require(tau_const.has_value(), Errc::Internal, "non-translation without a witness translation");
  std::vector<Scalar> nu = tau_const->translation_vector();

  ParamRing poly_t = ring_over(f.ring().base, RingKind::PolyT);
  Endo f_t = f.cast(RingKind::PolyT);
  Endo f_inv_t = formal_inverse(f).cast(RingKind::PolyT);

  std::vector<MultiPoly> tau_comps, tau_inv_comps;
  for (int i = 1; i <= f.n(); ++i) {
    MultiPoly shift = MultiPoly::param(poly_t, f.n()) *
                      MultiPoly::constant(poly_t, f.n(), nu[static_cast<std::size_t>(i - 1)]);
    tau_comps.push_back(MultiPoly::variable(poly_t, f.n(), i) + shift);
    tau_inv_comps.push_back(MultiPoly::variable(poly_t, f.n(), i) - shift);
  }
  Endo tau(poly_t, tau_comps), tau_inv(poly_t, tau_inv_comps);

  Endo g = compose(tau_inv, compose(f_inv_t, compose(tau, f_t)));
  return run_degeneration(g, nu, &f, samples, std::nullopt);
}

DegenerationCertificate degeneration_certificate(const Endo& g, const std::vector<Scalar>& samples,
                                                 std::optional<long long> grid_height) {
  return run_degeneration(g, std::nullopt, nullptr, samples, grid_height);
}

Endo alexander_family(const Endo& f) {
  require(!f.ring().has_param(), Errc::RingMismatch, "expected a parameter-free automorphism");
  const int n = f.n();
  const FieldPtr field = f.ring().base;
  std::vector<Scalar> origin(static_cast<std::size_t>(n), Scalar::zero(field));
  for (const Scalar& c : f.evaluate(origin))
    require(c.is_zero(), Errc::DoesNotFixOrigin, "the map must fix the origin");
  MultiPoly jac = jacobian(f);
  require(jac.is_constant() && !jac.is_zero(), Errc::JacobianNotUnit,
          "Jacobian " + jac.str() + " is not a unit");

  ParamRing laurent = ring_over(field, RingKind::LaurentT);
  Endo f_l = f.cast(RingKind::LaurentT);

  // alpha = (t x_1, ..., t x_n); g = alpha^{-1} ∘ f ∘ alpha
  std::vector<MultiPoly> scaled, unscaled;
  MultiPoly t = MultiPoly::param(laurent, n);
  for (int i = 1; i <= n; ++i) scaled.push_back(MultiPoly::variable(laurent, n, i) * t);
  Endo alpha(laurent, scaled);
  MultiPoly tinv(laurent, n);
  tinv.add_term(Monomial{-1, std::vector<int>(static_cast<std::size_t>(n), 0)}, Scalar::one(field));
  for (int i = 1; i <= n; ++i) unscaled.push_back(MultiPoly::variable(laurent, n, i) * tinv);
  Endo alpha_inv(laurent, unscaled);

  Endo g = compose(alpha_inv, compose(f_l, alpha));
  for (const auto& c : g.components())
    require(c.min_t_exp() >= 0, Errc::Internal, "Alexander family left k[t]");
  Endo family = g.cast(RingKind::PolyT);

  // endpoints: t = 1 gives f back, t = 0 gives the linear part
  require(family.specialize_t(Scalar::one(field)) == f, Errc::Internal,
          "family does not pass through f at t = 1");
  auto [m, v] = linear_part(f);
  Endo lin = Endo::linear(f.ring(), m);
  require(family.specialize_t(Scalar::zero(field)) == lin, Errc::Internal,
          "family limit differs from the linear part");
  return family;
}

SlnExtraction sln_extraction(const Endo& h, const std::vector<Scalar>& p,
                             const std::vector<Scalar>& q) {
  require(!h.ring().has_param(), Errc::RingMismatch, "expected a parameter-free automorphism");
  const int n = h.n();
  require(n >= 2, Errc::DimensionMismatch, "the construction needs n >= 2");
  require(static_cast<int>(p.size()) == n && static_cast<int>(q.size()) == n,
          Errc::DimensionMismatch, "points must have n coordinates");
  const FieldPtr field = h.ring().base;

  bool same = true;
  for (int i = 0; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] != q[static_cast<std::size_t>(i)]) same = false;
  require(!same, Errc::DegenerateGeometry, "p = q gives no direction to normalize");
  std::vector<Scalar> image = h.evaluate(p);
  for (int i = 0; i < n; ++i)
    require(image[static_cast<std::size_t>(i)] == q[static_cast<std::size_t>(i)],
            Errc::FixedPointMissing, "h(p) != q");

  // conjugate by the translation taking 0 to p: h1 = tau_p^{-1} ∘ h ∘ tau_p
  Endo tau_p = Endo::translation(h.ring(), p);
  std::vector<Scalar> neg_p;
  for (const Scalar& c : p) neg_p.push_back(-c);
  Endo tau_p_inv = Endo::translation(h.ring(), neg_p);
  Endo h1 = compose(tau_p_inv, compose(h, tau_p));

  // linear change taking e_1 to w = q - p: columns [w | standard vectors]
  std::vector<Scalar> w;
  for (int i = 0; i < n; ++i)
    w.push_back(q[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(i)]);
  int anchor = -1;
  for (int i = 0; i < n && anchor < 0; ++i)
    if (!w[static_cast<std::size_t>(i)].is_zero()) anchor = i;
  ScalarMatrix a(static_cast<std::size_t>(n),
                 std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(field)));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][0] = w[static_cast<std::size_t>(i)];
  int col = 1;
  for (int j = 0; j < n; ++j) {
    if (j == anchor) continue;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)] = Scalar::one(field);
    ++col;
  }
  Endo lin = Endo::linear(h.ring(), a);
  Endo lin_inv = Endo::linear(h.ring(), matrix_inverse(a));
  Endo h2 = compose(lin_inv, compose(h1, lin));

  // beta = (x1, x2 + x1 (x1 - 1)^2, x3, ..., xn) fixes both 0 and e_1
  MultiPoly x1 = MultiPoly::variable(h.ring(), n, 1);
  MultiPoly shear = x1 * (x1 - MultiPoly::of_int(h.ring(), n, 1)).pow(2);
  Endo beta = make_elementary(field, n, 2, shear);
  std::vector<MultiPoly> beta_inv_comps;
  for (int i = 1; i <= n; ++i) {
    MultiPoly c = MultiPoly::variable(h.ring(), n, i);
    if (i == 2) c = c - shear;
    beta_inv_comps.push_back(c);
  }
  Endo beta_inv(h.ring(), beta_inv_comps);

  Endo f = compose(formal_inverse(h2), compose(beta_inv, compose(h2, beta)));
  std::vector<Scalar> origin(static_cast<std::size_t>(n), Scalar::zero(field));
  for (const Scalar& c : f.evaluate(origin))
    require(c.is_zero(), Errc::Internal, "commutator does not fix the origin");

  Endo family = alexander_family(f);
  auto [limit_matrix, limit_shift] = linear_part(family.specialize_t(Scalar::zero(field)));

  // expected limit: the derivative of beta at the origin, I + E_{2,1}
  auto [beta_lin, beta_shift] = linear_part(beta);
  require(limit_matrix == beta_lin, Errc::Internal, "limit differs from D(beta) at the origin");
  require(!matrix_is_identity(limit_matrix), Errc::Internal, "limit matrix is trivial");
  return SlnExtraction{f, family, limit_matrix};
}

}  // namespace affaut
