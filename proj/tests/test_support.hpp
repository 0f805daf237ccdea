#pragma once

#include <vector>

#include "affaut/endo.hpp"
#include "affaut/rng.hpp"
#include "affaut/tame.hpp"

namespace affaut::testing {

inline Scalar random_scalar(Rng& rng, const FieldPtr& field, bool nonzero = false) {
  if (field->is_finite()) {
    unsigned q = field->cardinality();
    unsigned idx = static_cast<unsigned>(nonzero ? 1 + rng.below(q - 1) : rng.below(q));
    return Scalar::of_index(field, idx);
  }
  long long num = rng.int_in(-9, 9);
  if (nonzero && num == 0) num = 1;
  long long den = 1 + static_cast<long long>(rng.below(4));
  return Scalar::of_mpq(mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

inline MultiPoly random_poly(Rng& rng, const ParamRing& ring, int nvars, int max_deg,
                             int max_terms) {
  MultiPoly p(ring, nvars);
  int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int k = 0; k < terms; ++k) {
    Monomial m{0, std::vector<int>(static_cast<std::size_t>(nvars), 0)};
    int budget = max_deg;
    for (int i = 0; i < nvars; ++i) {
      int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget + 1)));
      m.x[static_cast<std::size_t>(i)] = e;
      budget -= e;
    }
    if (ring.has_param()) m.t = static_cast<int>(rng.below(3));
    p.add_term(m, random_scalar(rng, ring.base));
  }
  return p;
}

/// Random univariate polynomial in x_index of a plane ring (for triangular
/// offsets), degree <= max_deg.
inline MultiPoly random_offset(Rng& rng, const FieldPtr& field, int nvars, int var_index,
                               int max_deg) {
  ParamRing ring = ring_over(field);
  MultiPoly p(ring, nvars);
  for (int e = 0; e <= max_deg; ++e) {
    if (rng.below(3) == 0) continue;
    Monomial m{0, std::vector<int>(static_cast<std::size_t>(nvars), 0)};
    m.x[static_cast<std::size_t>(var_index - 1)] = e;
    p.add_term(m, random_scalar(rng, field));
  }
  return p;
}

/// Random plane tame word as a composition of affine and triangular factors.
/// With jac_one every factor (hence the word) has Jacobian 1. Triangular
/// degrees multiply under composition, so the word degree is budgeted to
/// keep inverse and factorization tests fast.
inline Endo random_plane_word(Rng& rng, const FieldPtr& field, int max_factors, int max_deg,
                              bool jac_one, int degree_budget = 24) {
  ParamRing ring = ring_over(field);
  Endo acc = Endo::identity(ring, 2);
  int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_factors)));
  for (int k = 0; k < count; ++k) {
    bool affine_turn = rng.coin();
    if (!affine_turn && acc.degree() * max_deg > degree_budget) affine_turn = true;
    if (affine_turn) {
      // affine: a product of shears and an optional swap keeps det = 1;
      // otherwise scale one row by a random unit
      Scalar one = Scalar::one(field), zero = Scalar::zero(field);
      ScalarMatrix m{{one, random_scalar(rng, field)}, {zero, one}};
      ScalarMatrix lower{{one, zero}, {random_scalar(rng, field), one}};
      m = matrix_mul(m, lower);
      if (rng.coin()) {
        ScalarMatrix swap{{zero, one}, {-one, zero}};  // det 1
        m = matrix_mul(m, swap);
      }
      if (!jac_one) {
        Scalar u = random_scalar(rng, field, true);
        for (auto& e : m[0]) e = e * u;
      }
      std::vector<Scalar> shift{random_scalar(rng, field), random_scalar(rng, field)};
      acc = compose(acc, Endo::linear(ring, m));
      acc = compose(acc, Endo::translation(ring, shift));
    } else {
      Scalar a = random_scalar(rng, field, true);
      Scalar a2 = jac_one ? a.inverse() : random_scalar(rng, field, true);
      MultiPoly b1 = MultiPoly::constant(ring, 2, random_scalar(rng, field));
      MultiPoly b2 = random_offset(rng, field, 2, 1, max_deg);
      acc = compose(acc, make_triangular(field, {a, a2}, {b1, b2}));
    }
  }
  return acc;
}

/// Random tame word in dimension n >= 2 (triangular + linear factors).
inline Endo random_tame_word(Rng& rng, const FieldPtr& field, int n, int max_factors, int max_deg,
                             bool jac_one) {
  ParamRing ring = ring_over(field);
  Endo acc = Endo::identity(ring, n);
  int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_factors)));
  for (int k = 0; k < count; ++k) {
    if (rng.coin()) {
      // elementary shear matrix I + c E_{ij} plus a translation
      int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (i == j) j = (j % n) + 1;
      ScalarMatrix m(static_cast<std::size_t>(n),
                     std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(field)));
      for (int d = 0; d < n; ++d) m[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] = Scalar::one(field);
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = random_scalar(rng, field);
      std::vector<Scalar> shift;
      for (int d = 0; d < n; ++d) shift.push_back(random_scalar(rng, field));
      acc = compose(acc, Endo::linear(ring, m));
      acc = compose(acc, Endo::translation(ring, shift));
    } else {
      std::vector<Scalar> a;
      std::vector<MultiPoly> b;
      Scalar prod = Scalar::one(field);
      for (int d = 1; d <= n; ++d) {
        Scalar ai = d == n && jac_one ? prod.inverse() : random_scalar(rng, field, true);
        prod = prod * ai;
        a.push_back(ai);
        MultiPoly bd(ring, n);
        for (int e = 1; e < d; ++e) {
          if (rng.below(2) == 0) continue;
          Monomial mono{0, std::vector<int>(static_cast<std::size_t>(n), 0)};
          mono.x[static_cast<std::size_t>(e - 1)] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg)));
          bd.add_term(mono, random_scalar(rng, field));
        }
        b.push_back(bd);
      }
      acc = compose(acc, make_triangular(field, a, b));
    }
  }
  return acc;
}

}  // namespace affaut::testing
