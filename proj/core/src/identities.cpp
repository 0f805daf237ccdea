#include "affaut/identities.hpp"

#include "affaut/tame.hpp"

namespace affaut {

namespace {

// shifted images (x1, x2 + c2, ..., xn + cn) for substitution into q
std::vector<MultiPoly> shifted_images(const ParamRing& ring, int n, const std::vector<Scalar>& c) {
  std::vector<MultiPoly> images;
  for (int i = 1; i <= n; ++i) {
    MultiPoly v = MultiPoly::variable(ring, n, i);
    if (i >= 2) v = v + MultiPoly::constant(ring, n, c[static_cast<std::size_t>(i - 2)]);
    images.push_back(v);
  }
  return images;
}

}  // namespace

IdentityReport verify_translation_commutator(const MultiPoly& q, const std::vector<Scalar>& eps) {
  const ParamRing& ring = q.ring();
  const int n = q.nvars();
  require(!ring.has_param(), Errc::RingMismatch, "the identity lives over a field");
  require(!q.depends_on_x(1), Errc::VariableLeak, "q must not involve x1");
  require(static_cast<int>(eps.size()) == n - 1, Errc::DimensionMismatch,
          "expected a shift for each of x2..xn");
  const FieldPtr field = ring.base;

  Endo e_q = make_elementary(field, n, 1, q);
  Endo e_q_inv = make_elementary(field, n, 1, -q);
  std::vector<Scalar> shift{Scalar::zero(field)};
  std::vector<Scalar> neg_shift{Scalar::zero(field)};
  for (const Scalar& c : eps) {
    shift.push_back(c);
    neg_shift.push_back(-c);
  }
  Endo tau = Endo::translation(ring, shift);
  Endo tau_inv = Endo::translation(ring, neg_shift);

  Endo lhs = compose(compose(e_q_inv, compose(tau_inv, e_q)), tau);

  MultiPoly q_shifted = q.substitute(shifted_images(ring, n, eps));
  std::vector<MultiPoly> rhs_comps;
  rhs_comps.push_back(MultiPoly::variable(ring, n, 1) + q_shifted - q);
  for (int i = 2; i <= n; ++i) rhs_comps.push_back(MultiPoly::variable(ring, n, i));
  Endo rhs(ring, std::move(rhs_comps));

  IdentityReport report{"translation-commutator",
                        {{"q", q.str()}, {"eps", [&] {
                           std::string s;
                           for (std::size_t i = 0; i < eps.size(); ++i)
                             s += (i ? "," : "") + eps[i].str();
                           return s;
                         }()}},
                        lhs,
                        rhs,
                        lhs == rhs};
  return report;
}

IdentityReport verify_char2_elementary(const Scalar& theta, const Scalar& mu, const Scalar& nu) {
  const FieldPtr field = theta.field();
  require(field->is_finite() && field->characteristic() == 2, Errc::WrongCharacteristic,
          "needs characteristic 2");
  require(field->cardinality() >= 3, Errc::FieldTooSmall, "needs at least 3 elements");
  const ParamRing ring = ring_over(field);
  const int n = 2;

  auto cubic_commutator = [&](const Scalar& coeff, const Scalar& shift) {
    MultiPoly q = MultiPoly::variable(ring, n, 2).pow(3) * coeff;
    return verify_translation_commutator(q, {shift});
  };
  IdentityReport first = cubic_commutator(theta * nu, mu);
  IdentityReport second = cubic_commutator(mu * nu, theta);

  Scalar tmn = theta * mu * nu;
  Scalar const_shift = tmn * (theta * theta + mu * mu);
  Endo translation = Endo::translation(ring, {const_shift, Scalar::zero(field)});

  Endo lhs = compose(first.lhs, compose(second.lhs, translation));

  MultiPoly linear = MultiPoly::variable(ring, n, 2) * (tmn * (theta + mu));
  Endo rhs(ring, {MultiPoly::variable(ring, n, 1) + linear, MultiPoly::variable(ring, n, 2)});

  return IdentityReport{"char2-elementary",
                        {{"theta", theta.str()}, {"mu", mu.str()}, {"nu", nu.str()}},
                        lhs,
                        rhs,
                        first.verdict && second.verdict && lhs == rhs};
}

IdentityReport verify_scaling_commutator(const MultiPoly& q, const std::vector<Scalar>& alpha) {
  const ParamRing& ring = q.ring();
  const int n = q.nvars();
  require(!ring.has_param(), Errc::RingMismatch, "the identity lives over a field");
  require(!q.depends_on_x(1), Errc::VariableLeak, "q must not involve x1");
  require(static_cast<int>(alpha.size()) == n - 1, Errc::DimensionMismatch,
          "expected a scale for each of x2..xn");
  const FieldPtr field = ring.base;
  for (const Scalar& a : alpha)
    require(!a.is_zero(), Errc::ZeroScalar, "diagonal scales must be nonzero");

  Scalar prod = Scalar::one(field);
  for (const Scalar& a : alpha) prod = prod * a;

  auto diagonal = [&](bool invert) {
    ScalarMatrix m(static_cast<std::size_t>(n),
                   std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(field)));
    m[0][0] = invert ? prod : prod.inverse();
    for (int i = 2; i <= n; ++i) {
      Scalar a = alpha[static_cast<std::size_t>(i - 2)];
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = invert ? a.inverse() : a;
    }
    return Endo::linear(ring, m);
  };
  Endo delta = diagonal(false), delta_inv = diagonal(true);

  Endo e_q = make_elementary(field, n, 1, q);
  Endo e_q_inv = make_elementary(field, n, 1, -q);
  Endo lhs = compose(compose(e_q_inv, compose(delta_inv, e_q)), delta);

  std::vector<MultiPoly> scaled_images;
  scaled_images.push_back(MultiPoly::variable(ring, n, 1));
  for (int i = 2; i <= n; ++i)
    scaled_images.push_back(MultiPoly::variable(ring, n, i) * alpha[static_cast<std::size_t>(i - 2)]);
  MultiPoly q_scaled = q.substitute(scaled_images);
  std::vector<MultiPoly> rhs_comps;
  rhs_comps.push_back(MultiPoly::variable(ring, n, 1) + q_scaled * prod - q);
  for (int i = 2; i <= n; ++i) rhs_comps.push_back(MultiPoly::variable(ring, n, i));
  Endo rhs(ring, std::move(rhs_comps));

  return IdentityReport{"scaling-commutator",
                        {{"q", q.str()}, {"alpha", [&] {
                           std::string s;
                           for (std::size_t i = 0; i < alpha.size(); ++i)
                             s += (i ? "," : "") + alpha[i].str();
                           return s;
                         }()}},
                        lhs,
                        rhs,
                        lhs == rhs};
}

MultiPoly nagata_quadric(const FieldPtr& field) {
  ParamRing ring = ring_over(field);
  MultiPoly x1 = MultiPoly::variable(ring, 3, 1);
  MultiPoly x2 = MultiPoly::variable(ring, 3, 2);
  MultiPoly x3 = MultiPoly::variable(ring, 3, 3);
  return x1 * x3 + x2 * x2;
}

Endo nagata_map(const Scalar& alpha) {
  const FieldPtr field = alpha.field();
  ParamRing ring = ring_over(field);
  MultiPoly d = nagata_quadric(field);
  MultiPoly x1 = MultiPoly::variable(ring, 3, 1);
  MultiPoly x2 = MultiPoly::variable(ring, 3, 2);
  MultiPoly x3 = MultiPoly::variable(ring, 3, 3);
  Scalar two_alpha = Scalar::of_int(field, 2) * alpha;
  MultiPoly c1 = x1 - x2 * d * two_alpha - x3 * d.pow(2) * (alpha * alpha);
  MultiPoly c2 = x2 + x3 * d * alpha;
  return Endo(ring, {c1, c2, x3});
}

Endo nagata_scaling(const Scalar& u) {
  require(!u.is_zero(), Errc::ZeroScalar, "scaling parameter must be nonzero");
  const FieldPtr field = u.field();
  ParamRing ring = ring_over(field);
  ScalarMatrix m(3, std::vector<Scalar>(3, Scalar::zero(field)));
  m[0][0] = u;
  m[1][1] = Scalar::one(field);
  m[2][2] = u.inverse();
  return Endo::linear(ring, m);
}

std::vector<IdentityReport> nagata_suite(const Scalar& alpha, const Scalar& beta, const Scalar& u) {
  require(!u.is_zero(), Errc::ZeroScalar, "u must be nonzero");
  const FieldPtr field = alpha.field();
  const ParamRing ring = ring_over(field);
  std::vector<IdentityReport> reports;
  auto params = [&](std::initializer_list<std::pair<std::string, std::string>> ps) {
    return std::vector<std::pair<std::string, std::string>>(ps);
  };

  Endo n_alpha = nagata_map(alpha);
  Endo n_beta = nagata_map(beta);
  MultiPoly quadric = nagata_quadric(field);

  {
    MultiPoly pulled = quadric.substitute(n_alpha.components());
    Endo lhs(ring, {pulled, MultiPoly(ring, 3), MultiPoly(ring, 3)});
    Endo rhs(ring, {quadric, MultiPoly(ring, 3), MultiPoly(ring, 3)});
    reports.push_back({"nagata-preserves-quadric",
                       params({{"alpha", alpha.str()}}),
                       lhs,
                       rhs,
                       pulled == quadric});
  }
  {
    Endo lhs = compose(n_alpha, n_beta);
    Endo rhs = nagata_map(alpha + beta);
    reports.push_back({"nagata-one-parameter-group",
                       params({{"alpha", alpha.str()}, {"beta", beta.str()}}),
                       lhs,
                       rhs,
                       lhs == rhs});
  }
  {
    MultiPoly jac = jacobian(n_alpha);
    MultiPoly one = MultiPoly::of_int(ring, 3, 1);
    Endo lhs(ring, {jac, MultiPoly(ring, 3), MultiPoly(ring, 3)});
    Endo rhs(ring, {one, MultiPoly(ring, 3), MultiPoly(ring, 3)});
    reports.push_back(
        {"nagata-jacobian-one", params({{"alpha", alpha.str()}}), lhs, rhs, jac == one});
  }
  {
    Endo l_u = nagata_scaling(u);
    Endo l_u_inv = nagata_scaling(u.inverse());
    Endo lhs = compose(l_u_inv, compose(n_alpha, l_u));
    Endo rhs = nagata_map(alpha / u);
    reports.push_back({"nagata-scaling-conjugation",
                       params({{"alpha", alpha.str()}, {"u", u.str()}}),
                       lhs,
                       rhs,
                       lhs == rhs});
  }
  {
    Endo l_u = nagata_scaling(u);
    Scalar one = Scalar::one(field);
    Endo middle = compose(l_u, nagata_map(alpha * (u - one) / u));
    Endo lhs = compose(n_alpha, compose(middle, nagata_map(-alpha)));
    reports.push_back({"nagata-normal-closure",
                       params({{"alpha", alpha.str()}, {"u", u.str()}}),
                       lhs,
                       l_u,
                       lhs == l_u});
  }
  return reports;
}

}  // namespace affaut
