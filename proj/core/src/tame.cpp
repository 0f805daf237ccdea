#include "affaut/tame.hpp"

#include <algorithm>

namespace affaut {

namespace {

ParamRing base_ring(const FieldPtr& f) { return ring_over(f); }

Scalar proportionality_factor(const MultiPoly& a, const MultiPoly& b) {
  // a = c * b for homogeneous forms, or raises NotAutomorphism
  require(!b.is_zero(), Errc::NotAutomorphism, "leading form vanished during reduction");
  const auto& [mono, coeff] = *b.terms().rbegin();
  Scalar c = a.coeff(mono) / coeff;
  require(a == b * c, Errc::NotAutomorphism, "leading forms are not proportional");
  return c;
}

}  // namespace

TameFactor TameFactor::affine(ScalarMatrix m, std::vector<Scalar> v) {
  TameFactor f{Kind::Affine, std::move(m), std::move(v), {}, {}};
  return f;
}

TameFactor TameFactor::triangular(std::vector<Scalar> a, std::vector<MultiPoly> b) {
  TameFactor f{Kind::Triangular, {}, {}, std::move(a), std::move(b)};
  return f;
}

Endo TameFactor::to_endo(const ParamRing& ring) const {
  if (kind == Kind::Affine) {
    int n = static_cast<int>(matrix.size());
    std::vector<MultiPoly> comps;
    for (int i = 0; i < n; ++i) {
      MultiPoly c = MultiPoly::constant(ring, n, shift[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j)
        c = c + MultiPoly::variable(ring, n, j + 1) * matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      comps.push_back(c);
    }
    return Endo(ring, std::move(comps));
  }
  int n = static_cast<int>(scale.size());
  std::vector<MultiPoly> comps;
  for (int i = 0; i < n; ++i) {
    MultiPoly c = MultiPoly::variable(ring, n, i + 1) * scale[static_cast<std::size_t>(i)];
    const MultiPoly& b = offset[static_cast<std::size_t>(i)];
    // offsets are stored over the parameter-free base ring
    std::vector<MultiPoly> images;
    for (int j = 1; j <= n; ++j) images.push_back(MultiPoly::variable(ring, n, j));
    c = c + b.substitute(images);
    comps.push_back(c);
  }
  return Endo(ring, std::move(comps));
}

Scalar TameFactor::jacobian_unit(const FieldPtr& field) const {
  if (kind == Kind::Affine) return matrix_det(matrix);
  Scalar u = Scalar::one(field);
  for (const auto& a : scale) u = u * a;
  return u;
}

Endo TameWord::evaluate() const {
  ParamRing ring = base_ring(field);
  Endo acc = Endo::identity(ring, n);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(it->to_endo(ring), acc);
  return acc;
}

Scalar TameWord::jacobian_unit() const {
  Scalar u = Scalar::one(field);
  for (const auto& f : factors) u = u * f.jacobian_unit(field);
  return u;
}

Endo make_translation(const FieldPtr& field, const std::vector<Scalar>& v) {
  return Endo::translation(base_ring(field), v);
}

Endo make_linear(const FieldPtr& field, const ScalarMatrix& m) {
  require(!matrix_det(m).is_zero(), Errc::SingularMatrix, "linear generator needs det != 0");
  return Endo::linear(base_ring(field), m);
}

Endo make_elementary(const FieldPtr& field, int n, int i, const MultiPoly& s) {
  require(i >= 1 && i <= n, Errc::DimensionMismatch, "elementary index out of range");
  require(!s.depends_on_t(), Errc::RingMismatch, "elementary offsets are parameter-free");
  require(!s.depends_on_x(i), Errc::VariableLeak,
          "elementary offset must not involve x" + std::to_string(i));
  ParamRing ring = base_ring(field);
  std::vector<MultiPoly> comps;
  for (int j = 1; j <= n; ++j) {
    MultiPoly c = MultiPoly::variable(ring, n, j);
    if (j == i) {
      std::vector<MultiPoly> images;
      for (int k = 1; k <= n; ++k) images.push_back(MultiPoly::variable(ring, n, k));
      c = c + s.substitute(images);
    }
    comps.push_back(c);
  }
  return Endo(ring, std::move(comps));
}

Endo make_triangular(const FieldPtr& field, const std::vector<Scalar>& a,
                     const std::vector<MultiPoly>& b) {
  const int n = static_cast<int>(a.size());
  require(static_cast<int>(b.size()) == n, Errc::DimensionMismatch,
          "triangular data needs matching scale/offset lists");
  for (int i = 0; i < n; ++i) {
    require(!a[static_cast<std::size_t>(i)].is_zero(), Errc::ZeroDiagonal,
            "triangular scale a" + std::to_string(i + 1) + " is zero");
    for (int j = i + 1; j <= n; ++j)
      require(!b[static_cast<std::size_t>(i)].depends_on_x(j), Errc::VariableLeak,
              "triangular offset b" + std::to_string(i + 1) + " involves x" + std::to_string(j));
  }
  return TameFactor::triangular(a, b).to_endo(base_ring(field));
}

// ---------------------------------------------------------------------------
// formal inverse

namespace {

// x-linear part of f as a polynomial matrix (entries may involve t)
PolyMatrix x_linear_matrix(const Endo& f) {
  const int n = f.n();
  PolyMatrix m;
  for (int i = 1; i <= n; ++i) {
    std::vector<MultiPoly> row;
    for (int j = 1; j <= n; ++j) {
      MultiPoly entry(f.ring(), n);
      for (const auto& [mono, coeff] : f.component(i).terms())
        if (mono.x_degree() == 1 && mono.x[static_cast<std::size_t>(j - 1)] == 1)
          entry.add_term(Monomial{mono.t, std::vector<int>(static_cast<std::size_t>(n), 0)}, coeff);
      row.push_back(entry);
    }
    m.push_back(std::move(row));
  }
  return m;
}

// inverse of a polynomial matrix whose determinant is a nonzero scalar
PolyMatrix poly_matrix_inverse(const PolyMatrix& m, const Scalar& det) {
  const std::size_t n = m.size();
  const ParamRing& ring = m[0][0].ring();
  int nv = m[0][0].nvars();
  PolyMatrix adj(n, std::vector<MultiPoly>(n, MultiPoly(ring, nv)));
  Scalar dinv = det.inverse();
  if (n == 1) {
    adj[0][0] = MultiPoly::constant(ring, nv, dinv);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<MultiPoly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      MultiPoly cof = poly_det(minor) * dinv;
      adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

Endo endo_from_poly_matrix(const PolyMatrix& m) {
  const std::size_t n = m.size();
  const ParamRing& ring = m[0][0].ring();
  int nv = m[0][0].nvars();
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly c(ring, nv);
    for (std::size_t j = 0; j < n; ++j)
      c = c + m[i][j] * MultiPoly::variable(ring, nv, static_cast<int>(j) + 1);
    comps.push_back(c);
  }
  return Endo(ring, std::move(comps));
}

}  // namespace

Endo formal_inverse(const Endo& f, std::optional<long long> degree_cap) {
  const ParamRing& ring = f.ring();
  require(ring.kind != RingKind::LaurentT, Errc::RingMismatch,
          "formal inversion works over k and k[t] coefficients");
  const int n = f.n();

  MultiPoly jac = jacobian(f);
  require(jac.is_constant() && !jac.is_zero(), Errc::JacobianNotUnit,
          "Jacobian " + jac.str() + " is not a unit of " + ring.tag());

  // f = tau ∘ L ∘ g with tau the translation by f(0), L the x-linear part
  // and g tangent to the identity; then f^{-1} = g^{-1} ∘ L^{-1} ∘ tau^{-1}.
  std::vector<MultiPoly> shift = f.origin_image();
  std::vector<MultiPoly> centered;
  for (int i = 1; i <= n; ++i)
    centered.push_back(f.component(i) - shift[static_cast<std::size_t>(i - 1)]);
  Endo f0(ring, centered);

  PolyMatrix lin = x_linear_matrix(f0);
  PolyMatrix lin_inv = poly_matrix_inverse(lin, jac.constant_value());
  Endo linear_inv_endo = endo_from_poly_matrix(lin_inv);
  Endo g = compose(linear_inv_endo, f0);  // tangent to the identity

  long long cap = degree_cap.value_or(1);
  if (!degree_cap) {
    cap = 1;
    for (int i = 1; i < n; ++i) cap *= std::max(1, f.degree());
  }
  cap = std::max<long long>(cap, 1);

  // solve u ∘ g = id degree by degree; running[i] = sum of solved parts
  // composed with g
  Endo u = Endo::identity(ring, n);
  std::vector<MultiPoly> running;
  for (int i = 1; i <= n; ++i) running.push_back(g.component(i));
  std::vector<MultiPoly> u_comps;
  for (int i = 1; i <= n; ++i) u_comps.push_back(MultiPoly::variable(ring, n, i));

  auto closed = [&]() {
    for (int i = 1; i <= n; ++i)
      if (running[static_cast<std::size_t>(i - 1)] != MultiPoly::variable(ring, n, i)) return false;
    return true;
  };

  for (long long deg = 2; !closed() && deg <= cap; ++deg) {
    for (int i = 0; i < n; ++i) {
      MultiPoly part = -running[static_cast<std::size_t>(i)].x_homogeneous_part(static_cast<int>(deg));
      if (part.is_zero()) continue;
      u_comps[static_cast<std::size_t>(i)] = u_comps[static_cast<std::size_t>(i)] + part;
      running[static_cast<std::size_t>(i)] =
          running[static_cast<std::size_t>(i)] + part.substitute(g.components());
    }
  }
  require(closed(), Errc::NotInvertible,
          "no inverse closed within degree cap " + std::to_string(cap));

  Endo g_inv(ring, u_comps);
  std::vector<MultiPoly> tau_inv_comps;
  for (int i = 1; i <= n; ++i)
    tau_inv_comps.push_back(MultiPoly::variable(ring, n, i) - shift[static_cast<std::size_t>(i - 1)]);
  Endo tau_inv(ring, tau_inv_comps);

  Endo inverse = compose(g_inv, compose(linear_inv_endo, tau_inv));
  require(compose(inverse, f).is_identity() && compose(f, inverse).is_identity(),
          Errc::NotInvertible, "inverse verification failed");
  return inverse;
}

// ---------------------------------------------------------------------------
// Jung-van der Kulk

TameWord jvdk_decompose(const Endo& f) {
  require(f.n() == 2, Errc::DimensionMismatch, "plane factorization needs n = 2");
  require(!f.ring().has_param(), Errc::RingMismatch, "plane factorization works over a field");
  const FieldPtr field = f.ring().base;
  const ParamRing ring = f.ring();

  MultiPoly jac = jacobian(f);
  require(jac.is_constant() && !jac.is_zero(), Errc::NotAutomorphism,
          "Jacobian " + jac.str() + " is not a unit");

  std::vector<TameFactor> raw;
  Endo g = f;
  auto swap_factor = [&]() {
    Scalar z = Scalar::zero(field), o = Scalar::one(field);
    return TameFactor::affine({{z, o}, {o, z}}, {z, z});
  };

  bool swapped_last = false;
  while (true) {
    int d1 = g.component(1).x_degree();
    int d2 = g.component(2).x_degree();
    require(d1 >= 0 && d2 >= 0, Errc::NotAutomorphism, "component collapsed to zero");
    if (d1 <= 1 && d2 <= 1) break;
    require(d1 >= 1 && d2 >= 1, Errc::NotAutomorphism, "constant component");

    if (d1 >= d2) {
      bool divisible = d1 % d2 == 0;
      Scalar c = Scalar::zero(field);
      bool proportional = false;
      if (divisible) {
        MultiPoly lead1 = g.component(1).leading_x_form();
        MultiPoly lead2 = g.component(2).leading_x_form().pow(d1 / d2);
        const auto& [mono, coeff] = *lead2.terms().rbegin();
        c = lead1.coeff(mono) / coeff;
        proportional = !c.is_zero() && lead1 == lead2 * c;
      }
      if (!proportional) {
        // a tie may still reduce after one swap; anything else is stuck
        require(d1 == d2 && !swapped_last, Errc::NotAutomorphism,
                "leading form of degree " + std::to_string(d1) +
                    " is not proportional to the required power");
        raw.push_back(swap_factor());
        g = compose(swap_factor().to_endo(ring), g);
        swapped_last = true;
        continue;
      }
      swapped_last = false;
      int k = d1 / d2;
      // g = e^{-1} ∘ g' with e = (x1 - c x2^k, x2); emit e^{-1} as swap ∘ tri ∘ swap
      MultiPoly x1k = MultiPoly::variable(ring, 2, 1).pow(k) * c;
      raw.push_back(swap_factor());
      raw.push_back(TameFactor::triangular({Scalar::one(field), Scalar::one(field)},
                                           {MultiPoly(ring, 2), x1k}));
      raw.push_back(swap_factor());
      Endo reduced(ring, {g.component(1) - g.component(2).pow(k) * c, g.component(2)});
      g = reduced;
    } else {
      require(d2 % d1 == 0, Errc::NotAutomorphism,
              "degrees " + std::to_string(d1) + ", " + std::to_string(d2) + " do not divide");
      int k = d2 / d1;
      MultiPoly lead2 = g.component(2).leading_x_form();
      MultiPoly lead1 = g.component(1).leading_x_form().pow(k);
      Scalar c = proportionality_factor(lead2, lead1);
      swapped_last = false;
      MultiPoly x1k = MultiPoly::variable(ring, 2, 1).pow(k) * c;
      raw.push_back(TameFactor::triangular({Scalar::one(field), Scalar::one(field)},
                                           {MultiPoly(ring, 2), x1k}));
      Endo reduced(ring, {g.component(1), g.component(2) - g.component(1).pow(k) * c});
      g = reduced;
    }
  }

  // affine tail
  auto [m, v] = linear_part(g);
  if (!g.is_identity()) {
    require(!matrix_det(m).is_zero(), Errc::NotAutomorphism, "affine tail is singular");
    raw.push_back(TameFactor::affine(m, v));
  }

  // merge adjacent factors of the same kind so the word alternates
  std::vector<TameFactor> merged;
  for (const auto& fac : raw) {
    if (!merged.empty() && merged.back().kind == fac.kind) {
      if (fac.kind == TameFactor::Kind::Affine) {
        // (M1,v1) ∘ (M2,v2) = (M1 M2, M1 v2 + v1)
        const auto& l = merged.back();
        ScalarMatrix m2 = matrix_mul(l.matrix, fac.matrix);
        std::vector<Scalar> v2;
        for (std::size_t i = 0; i < l.matrix.size(); ++i) {
          Scalar acc = l.shift[i];
          for (std::size_t k = 0; k < l.matrix.size(); ++k)
            acc = acc + l.matrix[i][k] * fac.shift[k];
          v2.push_back(acc);
        }
        merged.back() = TameFactor::affine(std::move(m2), std::move(v2));
      } else {
        // compose triangular data directly
        const auto& l = merged.back();
        Endo le = l.to_endo(ring), re = fac.to_endo(ring);
        Endo prod = compose(le, re);
        std::vector<Scalar> a;
        std::vector<MultiPoly> b;
        for (int i = 1; i <= 2; ++i) {
          MultiPoly ci = prod.component(i);
          Monomial xi{0, std::vector<int>(2, 0)};
          xi.x[static_cast<std::size_t>(i - 1)] = 1;
          a.push_back(ci.coeff(xi));
          MultiPoly rest = ci - MultiPoly::variable(ring, 2, i) * ci.coeff(xi);
          b.push_back(rest);
        }
        merged.back() = TameFactor::triangular(std::move(a), std::move(b));
      }
      // drop factors that merged to the identity
      Endo e = merged.back().to_endo(ring);
      if (e.is_identity()) merged.pop_back();
    } else {
      merged.push_back(fac);
    }
  }

  TameWord word{field, 2, std::move(merged)};
  require(word.evaluate() == f, Errc::Internal, "factorization failed to recompose");
  return word;
}

bool is_plane_automorphism(const Endo& f) {
  try {
    jvdk_decompose(f);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::NotAutomorphism) return false;
    throw;
  }
}

// ---------------------------------------------------------------------------
// SAut normalization

namespace {

// conjugate the factor by coordinate-1 diagonal maps:
// D(delta)^{-1} ∘ F ∘ D(delta_right) with D(d) = (d x1, x2, ..., xn)
TameFactor diagonal_conjugate(const TameFactor& fac, const ParamRing& ring, int n,
                              const Scalar& left_delta, const Scalar& right_delta) {
  if (fac.kind == TameFactor::Kind::Affine) {
    ScalarMatrix m = fac.matrix;
    std::vector<Scalar> v = fac.shift;
    Scalar li = left_delta.inverse();
    for (int j = 0; j < n; ++j) m[0][static_cast<std::size_t>(j)] = m[0][static_cast<std::size_t>(j)] * li;
    v[0] = v[0] * li;
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][0] = m[static_cast<std::size_t>(i)][0] * right_delta;
    return TameFactor::affine(std::move(m), std::move(v));
  }
  std::vector<Scalar> a = fac.scale;
  std::vector<MultiPoly> b = fac.offset;
  Scalar li = left_delta.inverse();
  a[0] = a[0] * right_delta * li;
  b[0] = b[0] * li;
  // substitute x1 -> right_delta * x1 inside the offsets of later coordinates
  std::vector<MultiPoly> images;
  for (int j = 1; j <= n; ++j) images.push_back(MultiPoly::variable(ring, n, j));
  images[0] = images[0] * right_delta;
  for (int i = 1; i < n; ++i) b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)].substitute(images);
  return TameFactor::triangular(std::move(a), std::move(b));
}

}  // namespace

TameWord saut_normalize_word(const TameWord& w) {
  const FieldPtr field = w.field;
  const ParamRing ring = base_ring(field);
  require(w.jacobian_unit().is_one(), Errc::JacobianNotOne,
          "word product has Jacobian " + w.jacobian_unit().str());
  if (w.factors.empty()) return w;

  // running delta_j = (J_1 ... J_j)^{-1}; factor j is conjugated by the
  // coordinate-1 diagonals D(delta_{j-1})^{-1} on the left, D(delta_j) on
  // the right, which multiplies its Jacobian by delta_j / delta_{j-1} = 1/J_j
  TameWord out{field, w.n, {}};
  Scalar delta_prev = Scalar::one(field);
  Endo original = w.evaluate();
  for (std::size_t j = 0; j < w.factors.size(); ++j) {
    Scalar jac = w.factors[j].jacobian_unit(field);
    Scalar delta_cur =
        (j + 1 == w.factors.size()) ? Scalar::one(field) : delta_prev * jac.inverse();
    out.factors.push_back(diagonal_conjugate(w.factors[j], ring, w.n, delta_prev, delta_cur));
    delta_prev = delta_cur;
  }
  require(out.evaluate() == original, Errc::Internal, "normalization changed the product");
  for (const auto& fac : out.factors)
    require(fac.jacobian_unit(field).is_one(), Errc::Internal, "factor escaped SAut");
  return out;
}

}  // namespace affaut
