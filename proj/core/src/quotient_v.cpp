#include "affaut/quotient_v.hpp"

#include <algorithm>
#include <mutex>

#include "affaut/finite_action.hpp"
#include "affaut/tame.hpp"

namespace affaut {

namespace {

// dense univariate helpers over GF(q), coefficients as element indices,
// ascending degree, no trailing zeros

using UPoly = std::vector<unsigned>;

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly uadd(const FieldDesc& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned x = i < a.size() ? a[i] : 0;
    unsigned y = i < b.size() ? b[i] : 0;
    r[i] = f.add(x, y);
  }
  utrim(r);
  return r;
}

UPoly uscale(const FieldDesc& f, const UPoly& a, unsigned c) {
  UPoly r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  utrim(r);
  return r;
}

UPoly umul(const FieldDesc& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  utrim(r);
  return r;
}

// division with remainder by a monic divisor
std::pair<UPoly, UPoly> udivrem(const FieldDesc& f, UPoly a, const UPoly& d) {
  utrim(a);
  UPoly quot;
  if (a.size() < d.size()) return {quot, a};
  quot.assign(a.size() - d.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= d.size();) {
    unsigned lead = a[k];
    if (lead != 0) {
      std::size_t shift = k - (d.size() - 1);
      quot[shift] = lead;
      for (std::size_t i = 0; i < d.size(); ++i)
        a[shift + i] = f.sub(a[shift + i], f.mul(lead, d[i]));
    }
    if (k == 0) break;
  }
  utrim(a);
  utrim(quot);
  return {quot, a};
}

UPoly upoly_of(const MultiPoly& s) {
  require(s.nvars() == 1 && !s.ring().has_param(), Errc::RingMismatch,
          "expected a parameter-free univariate polynomial");
  require(s.ring().base->is_finite(), Errc::FieldMismatch, "expected a finite base field");
  UPoly r;
  for (const auto& [m, c] : s.terms()) {
    std::size_t e = static_cast<std::size_t>(m.x[0]);
    if (r.size() <= e) r.resize(e + 1, 0);
    r[e] = c.index();
  }
  return r;
}

MultiPoly upoly_to_multi(const FieldPtr& field, const UPoly& a) {
  ParamRing ring = ring_over(field);
  MultiPoly p(ring, 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) p.add_term(Monomial{0, {static_cast<int>(i)}}, Scalar::of_index(field, a[i]));
  return p;
}

UPoly vanishing_poly(const FieldDesc& f) {
  // R = x^q - x
  UPoly r(f.cardinality() + 1, 0);
  r[1] = f.neg(1);
  r[f.cardinality()] = 1;
  return r;
}

// (a x + b)^i as a dense polynomial
UPoly affine_power(const FieldDesc& f, unsigned a, unsigned b, int i) {
  UPoly acc{1};
  UPoly lin{b, a};
  for (int k = 0; k < i; ++k) acc = umul(f, acc, lin);
  return acc;
}

}  // namespace

MExpansion to_m_basis(const MultiPoly& s) {
  const FieldPtr field = s.ring().base;
  MExpansion e{field, {}};
  UPoly rest = upoly_of(s);
  UPoly r = vanishing_poly(*field);
  while (!rest.empty()) {
    auto [quot, digit] = udivrem(*field, rest, r);
    digit.resize(field->cardinality(), 0);  // pad to q slots
    e.strata.push_back(digit);
    rest = quot;
  }
  return e;
}

MultiPoly from_m_basis(const MExpansion& e) {
  const FieldPtr& field = e.field;
  UPoly r = vanishing_poly(*field);
  UPoly acc;
  UPoly rpow{1};
  for (std::size_t j = 0; j < e.strata.size(); ++j) {
    UPoly digit = e.strata[j];
    utrim(digit);
    acc = uadd(*field, acc, umul(*field, digit, rpow));
    rpow = umul(*field, rpow, r);
  }
  return upoly_to_multi(field, acc);
}

// ---------------------------------------------------------------------------
// VBasis

void VBasis::build(int strata_count) {
  const FieldDesc& f = *field_;
  const unsigned q = f.cardinality();
  strata_.resize(static_cast<std::size_t>(strata_count));
  for (int j = 0; j < strata_count; ++j) {
    Stratum& st = strata_[static_cast<std::size_t>(j)];
    for (unsigned a = 1; a < q; ++a) {
      unsigned aj1 = f.pow(a, static_cast<unsigned>(j) + 1);
      for (unsigned b = 0; b < q; ++b) {
        for (int i = 0; i < static_cast<int>(q); ++i) {
          // x^i - a^{j+1} (a x + b)^i, the stratum-j digit of a generator
          UPoly vec = affine_power(f, a, b, i);
          vec.resize(q, 0);
          for (auto& c : vec) c = f.neg(f.mul(aj1, c));
          vec[static_cast<std::size_t>(i)] = f.add(vec[static_cast<std::size_t>(i)], 1);
          UPoly row = vec;
          utrim(row);
          if (row.empty()) continue;
          std::vector<std::pair<VGenerator, unsigned>> combo{
              {VGenerator{i, j, a, b}, 1u}};
          // reduce against the existing echelon rows
          vec.resize(q, 0);
          for (const EchelonRow& er : st.rows) {
            unsigned c = vec[static_cast<std::size_t>(er.pivot)];
            if (c == 0) continue;
            for (unsigned k = 0; k < q; ++k)
              vec[k] = f.sub(vec[k], f.mul(c, er.vec[k]));
            for (const auto& [g, coef] : er.combination) {
              bool merged = false;
              for (auto& [eg, ec] : combo)
                if (eg.i == g.i && eg.j == g.j && eg.a == g.a && eg.b == g.b) {
                  ec = f.sub(ec, f.mul(c, coef));
                  merged = true;
                  break;
                }
              if (!merged) combo.push_back({g, f.neg(f.mul(c, coef))});
            }
          }
          int pivot = -1;
          for (int k = static_cast<int>(q) - 1; k >= 0; --k)
            if (vec[static_cast<std::size_t>(k)] != 0) {
              pivot = k;
              break;
            }
          if (pivot < 0) continue;
          unsigned inv = f.inv(vec[static_cast<std::size_t>(pivot)]);
          for (auto& c : vec) c = f.mul(c, inv);
          for (auto& [g, coef] : combo) coef = f.mul(coef, inv);
          st.rows.push_back({vec, pivot, combo});
          // keep rows sorted by pivot descending so reduction sweeps once
          std::sort(st.rows.begin(), st.rows.end(),
                    [](const EchelonRow& x, const EchelonRow& y) { return x.pivot > y.pivot; });
        }
      }
    }
  }
}

std::shared_ptr<const VBasis> VBasis::get(const FieldPtr& field, int strata_count) {
  require(field->is_finite(), Errc::FieldMismatch, "V lives over a finite field");
  require(field->cardinality() <= 64, Errc::CardinalityTooLarge,
          "stratum reduction is capped at q <= 64");
  static std::map<std::pair<std::pair<unsigned, unsigned>, int>, std::shared_ptr<const VBasis>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(std::make_pair(field->characteristic(), field->extension_degree()),
                            strata_count);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::shared_ptr<VBasis>(new VBasis());
  basis->field_ = field;
  basis->build(strata_count);
  cache.emplace(key, basis);
  return basis;
}

VBasis::Reduction VBasis::reduce(int stratum, const std::vector<unsigned>& digit) const {
  const FieldDesc& f = *field_;
  const unsigned q = f.cardinality();
  Reduction red;
  red.remainder = digit;
  red.remainder.resize(q, 0);
  require(stratum < strata_count(), Errc::Internal, "stratum out of range");
  for (const EchelonRow& er : strata_[static_cast<std::size_t>(stratum)].rows) {
    unsigned c = red.remainder[static_cast<std::size_t>(er.pivot)];
    if (c == 0) continue;
    for (unsigned k = 0; k < q; ++k)
      red.remainder[k] = f.sub(red.remainder[k], f.mul(c, er.vec[k]));
    for (const auto& [g, coef] : er.combination) {
      bool merged = false;
      for (auto& [eg, ec] : red.combination)
        if (eg.i == g.i && eg.j == g.j && eg.a == g.a && eg.b == g.b) {
          ec = f.add(ec, f.mul(c, coef));
          merged = true;
          break;
        }
      if (!merged) red.combination.push_back({g, f.mul(c, coef)});
    }
  }
  return red;
}

// ---------------------------------------------------------------------------

VMembership v_membership(const MultiPoly& s, std::optional<int> stratum_bound) {
  const FieldPtr field = s.ring().base;
  MExpansion e = to_m_basis(s);
  int strata = static_cast<int>(e.strata.size());
  if (stratum_bound) strata = std::max(strata, *stratum_bound + 1);
  strata = std::max(strata, 1);
  auto basis = VBasis::get(field, strata);

  VMembership out{true, strata, {}, MultiPoly(ring_over(field), 1)};
  MExpansion rem{field, {}};
  for (int j = 0; j < static_cast<int>(e.strata.size()); ++j) {
    auto red = basis->reduce(j, e.strata[static_cast<std::size_t>(j)]);
    bool zero = std::all_of(red.remainder.begin(), red.remainder.end(),
                            [](unsigned c) { return c == 0; });
    if (!zero) out.member = false;
    rem.strata.push_back(red.remainder);
    for (const auto& pr : red.combination) out.combination.push_back(pr);
  }
  out.remainder = from_m_basis(rem);
  if (!out.member) out.combination.clear();
  return out;
}

VClass v_class_of(const MultiPoly& s) {
  VMembership m = v_membership(s);
  return VClass{s.ring().base, m.remainder};
}

VClass v_class_zero(const FieldPtr& field) {
  return VClass{field, MultiPoly(ring_over(field), 1)};
}

VClass v_class_add(const VClass& a, const VClass& b) { return v_class_of(a.rep + b.rep); }

bool independence_check(const FieldPtr& field, int m_count) {
  require(m_count >= 0 && m_count <= 5, Errc::BadRequest, "independence check supports M <= 5");
  if (m_count == 0) return true;
  const unsigned q = field->cardinality();
  ParamRing ring = ring_over(field);
  MultiPoly x = MultiPoly::variable(ring, 1, 1);
  MultiPoly r = x.pow(static_cast<int>(q)) - x;

  // reduce each candidate class; they sit in distinct strata, so collect the
  // representatives and run one joint rank computation
  std::vector<UPoly> reps;
  std::size_t maxlen = 1;
  for (int m = 1; m <= m_count; ++m) {
    int j = m * (static_cast<int>(q) - 1) - 1;
    MultiPoly w = x.pow(static_cast<int>(q) - 1) * r.pow(j);
    VClass cls = v_class_of(w);
    UPoly rep = upoly_of(cls.rep);
    maxlen = std::max(maxlen, rep.size());
    reps.push_back(rep);
  }
  // Gaussian rank over GF(q)
  const FieldDesc& f = *field;
  for (auto& rep : reps) rep.resize(maxlen, 0);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < maxlen && rank < reps.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < reps.size() && reps[pivot][col] == 0) ++pivot;
    if (pivot == reps.size()) continue;
    std::swap(reps[rank], reps[pivot]);
    unsigned inv = f.inv(reps[rank][col]);
    for (auto& c : reps[rank]) c = f.mul(c, inv);
    for (std::size_t rw = 0; rw < reps.size(); ++rw) {
      if (rw == rank || reps[rw][col] == 0) continue;
      unsigned c0 = reps[rw][col];
      for (std::size_t k = 0; k < maxlen; ++k)
        reps[rw][k] = f.sub(reps[rw][k], f.mul(c0, reps[rank][k]));
    }
    ++rank;
  }
  return rank == reps.size();
}

VClass rho(const Endo& f, bool mod_linear) {
  require(f.n() == 2, Errc::DimensionMismatch, "the quotient homomorphism lives on the plane");
  require(!f.ring().has_param(), Errc::RingMismatch, "expected a parameter-free automorphism");
  const FieldPtr field = f.ring().base;
  require(field->is_finite(), Errc::FieldMismatch, "the quotient homomorphism needs a finite field");
  MultiPoly jac = jacobian(f);
  require(jac.is_constant() && jac.constant_value().is_one(), Errc::NotSAut,
          "Jacobian " + jac.str() + " != 1");

  TameWord word = jvdk_decompose(f);
  TameWord norm = saut_normalize_word(word);

  ParamRing ring = ring_over(field);
  VClass acc = v_class_zero(field);
  for (const TameFactor& fac : norm.factors) {
    if (fac.kind == TameFactor::Kind::Triangular) {
      // (a x1 + b, a^{-1} x2 + s(x1)) maps to the class of s
      const MultiPoly& offset2 = fac.offset[1];
      MultiPoly s(ring_over(field), 1);
      for (const auto& [m, c] : offset2.terms())
        s.add_term(Monomial{0, {m.x[0]}}, c);
      acc = v_class_add(acc, v_class_of(s));
    } else {
      if (field->cardinality() > 2) continue;  // affine factors die for q > 2
      PermRep rep = permutation_of(fac.to_endo(ring));
      require(rep.bijective, Errc::Internal, "affine factor is not bijective");
      if (rep.sign == -1) {
        MultiPoly x = MultiPoly::variable(ring_over(field), 1, 1);
        acc = v_class_add(acc, v_class_of(x));
      }
    }
  }
  if (mod_linear) {
    require(field->cardinality() == 2, Errc::BadRequest,
            "the mod-linear variant targets the GF(2) quotient");
    // further kill the span of x: drop the degree-1 coefficient of the
    // canonical representative (x itself is reduced, so this is the
    // echelon reduction against the extra generator x)
    UPoly rep = upoly_of(acc.rep);
    if (rep.size() >= 2) rep[1] = 0;
    acc = VClass{field, upoly_to_multi(field, rep)};
  }
  return acc;
}

}  // namespace affaut
