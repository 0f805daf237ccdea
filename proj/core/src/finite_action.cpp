#include "affaut/finite_action.hpp"

#include <algorithm>
#include <array>

#include "affaut/tame.hpp"

namespace affaut {

namespace {

constexpr std::uint64_t kPointCap = 10'000'000;
constexpr std::uint64_t kCensusPointCap = 1'000'000;

/// Element-index arithmetic with full lookup tables for small fields;
/// large fields fall back to FieldDesc digit arithmetic.
struct FieldOps {
  const FieldDesc* f;
  unsigned q;
  bool tabled;
  std::vector<std::uint16_t> add_t, mul_t, neg_t;

  explicit FieldOps(const FieldPtr& field) : f(field.get()), q(field->cardinality()) {
    tabled = q <= 256;
    if (tabled) {
      add_t.resize(static_cast<std::size_t>(q) * q);
      mul_t.resize(static_cast<std::size_t>(q) * q);
      neg_t.resize(q);
      for (unsigned a = 0; a < q; ++a) {
        neg_t[a] = static_cast<std::uint16_t>(f->neg(a));
        for (unsigned b = 0; b < q; ++b) {
          add_t[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(f->add(a, b));
          mul_t[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(f->mul(a, b));
        }
      }
    }
  }
  unsigned add(unsigned a, unsigned b) const {
    return tabled ? add_t[static_cast<std::size_t>(a) * q + b] : f->add(a, b);
  }
  unsigned mul(unsigned a, unsigned b) const {
    return tabled ? mul_t[static_cast<std::size_t>(a) * q + b] : f->mul(a, b);
  }
  unsigned neg(unsigned a) const { return tabled ? neg_t[a] : f->neg(a); }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned pow(unsigned a, unsigned e) const {
    unsigned r = 1;
    while (e) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1u;
    }
    return r;
  }
};

struct FastTerm {
  unsigned coeff;
  std::vector<int> exps;
};

std::vector<FastTerm> compile_poly(const MultiPoly& p) {
  std::vector<FastTerm> terms;
  for (const auto& [m, c] : p.terms()) {
    require(m.t == 0, Errc::RingMismatch, "point evaluation needs a parameter-free polynomial");
    terms.push_back({c.index(), m.x});
  }
  return terms;
}

unsigned eval_fast(const std::vector<FastTerm>& terms, const FieldOps& ops,
                   const std::vector<unsigned>& point) {
  unsigned acc = 0;
  for (const auto& t : terms) {
    unsigned v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.exps[i] > 0) v = ops.mul(v, ops.pow(point[i], static_cast<unsigned>(t.exps[i])));
    acc = ops.add(acc, v);
  }
  return acc;
}

void finalize_cycles(PermRep& rep) {
  const std::uint64_t n = rep.npoints;
  std::vector<bool> seen(n, false);
  std::map<std::uint64_t, std::uint64_t> cycles;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = rep.image[j];
      ++len;
    }
    ++cycles[len];
    ++count;
  }
  rep.cycle_type.assign(cycles.begin(), cycles.end());
  rep.sign = ((n - count) % 2 == 0) ? 1 : -1;
}

}  // namespace

std::uint64_t point_count(const FieldPtr& field, int n) {
  require(field->is_finite(), Errc::FieldMismatch, "point enumeration needs a finite field");
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c *= field->cardinality();
  return c;
}

std::vector<Scalar> point_of_index(const FieldPtr& field, int n, std::uint64_t index) {
  std::vector<Scalar> pt(static_cast<std::size_t>(n), Scalar::zero(field));
  for (int i = n - 1; i >= 0; --i) {
    pt[static_cast<std::size_t>(i)] =
        Scalar::of_index(field, static_cast<unsigned>(index % field->cardinality()));
    index /= field->cardinality();
  }
  return pt;
}

std::uint64_t index_of_point(const std::vector<Scalar>& point) {
  require(!point.empty(), Errc::DimensionMismatch, "empty point");
  const FieldPtr& field = point.front().field();
  std::uint64_t idx = 0;
  for (const Scalar& c : point) idx = idx * field->cardinality() + c.index();
  return idx;
}

int table_sign(const std::vector<std::uint32_t>& image) {
  PermRep tmp;
  tmp.npoints = image.size();
  tmp.image = image;
  finalize_cycles(tmp);
  return tmp.sign;
}

PermRep permutation_of(const Endo& f) {
  require(!f.ring().has_param(), Errc::RingMismatch, "the action needs a parameter-free map");
  const FieldPtr field = f.ring().base;
  const int n = f.n();
  std::uint64_t npoints = point_count(field, n);
  require(npoints <= kPointCap, Errc::TooManyPoints,
          std::to_string(npoints) + " points exceed the enumeration cap");

  FieldOps ops(field);
  std::vector<std::vector<FastTerm>> comps;
  for (int i = 1; i <= n; ++i) comps.push_back(compile_poly(f.component(i)));

  PermRep rep{field, n, npoints, {}, true, {}, 0};
  rep.image.resize(npoints);
  std::vector<bool> hit(npoints, false);

  std::vector<unsigned> point(static_cast<std::size_t>(n), 0);  // digits, x_n fastest
  for (std::uint64_t idx = 0; idx < npoints; ++idx) {
    std::uint64_t out = 0;
    for (const auto& c : comps) out = out * ops.q + eval_fast(c, ops, point);
    rep.image[idx] = static_cast<std::uint32_t>(out);
    if (hit[out])
      rep.bijective = false;
    else
      hit[out] = true;
    for (int i = n - 1; i >= 0; --i) {
      if (++point[static_cast<std::size_t>(i)] < ops.q) break;
      point[static_cast<std::size_t>(i)] = 0;
    }
  }
  if (rep.bijective) finalize_cycles(rep);
  return rep;
}

std::uint64_t fixed_locus_count(const Endo& f) {
  PermRep rep = permutation_of(f);
  std::uint64_t fixed = 0;
  for (std::uint64_t i = 0; i < rep.npoints; ++i)
    if (rep.image[i] == i) ++fixed;
  return fixed;
}

// ---------------------------------------------------------------------------
// census

namespace {

// monomial exponent tuples in v variables of total degree <= dmax, ascending
std::vector<std::vector<int>> monomials_up_to(int v, int dmax) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(v), 0);
  while (true) {
    int total = 0;
    for (int e : cur) total += e;
    if (total <= dmax) out.push_back(cur);
    int i = v - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == dmax) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

MultiPoly offset_poly(const FieldPtr& field, const std::vector<std::vector<int>>& monos,
                      const std::vector<unsigned>& coeffs, int n) {
  // s(x2..xn) from its coefficient vector on the monomial list
  ParamRing ring = ring_over(field);
  MultiPoly s(ring, n);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Monomial m{0, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int j = 0; j < n - 1; ++j) m.x[static_cast<std::size_t>(j + 1)] = monos[k][static_cast<std::size_t>(j)];
    s.add_term(m, Scalar::of_index(field, coeffs[k]));
  }
  return s;
}

}  // namespace

CensusReport even_action_census(const FieldPtr& field, int n) {
  require(field->is_finite(), Errc::FieldMismatch, "the census needs a finite field");
  std::uint64_t npoints = point_count(field, n);
  require(npoints <= kCensusPointCap, Errc::TooManyPoints, "census point cap is 10^6");

  const unsigned q = field->cardinality();
  const unsigned p = field->characteristic();
  const ParamRing ring = ring_over(field);
  FieldOps ops(field);
  CensusReport report{field, n, {}, true};

  // --- translations ---
  {
    CensusLine line{"translations", 0, true, !(q == 2 && n == 1), std::nullopt};
    std::uint64_t total = npoints;  // one translation per vector
    line.checked = total;
    // a nonzero translation moves every point in cycles of length p
    std::uint64_t moved_cycles = npoints / p;
    bool nonzero_even = ((npoints - moved_cycles) % 2) == 0;
    if (!nonzero_even) {
      line.all_even = false;
      std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar::zero(field));
      v[0] = Scalar::one(field);
      line.odd_witness = Endo::translation(ring, v).str();
    }
    // brute-force cross-check when cheap
    if (npoints * npoints <= 4'000'000ULL) {
      for (std::uint64_t vi = 0; vi < npoints; ++vi) {
        Endo tau = Endo::translation(ring, point_of_index(field, n, vi));
        PermRep rep = permutation_of(tau);
        bool expect_even = vi == 0 ? true : nonzero_even;
        require(rep.bijective && (rep.sign == 1) == expect_even, Errc::Internal,
                "translation parity disagrees with the cycle formula");
      }
    }
    report.lines.push_back(line);
  }

  // --- elementary maps e_s with deg s <= 3 (coordinate 1) ---
  if (n >= 2) {
    CensusLine line{"elementary-deg3", 0, true, q > 2, std::nullopt};
    auto monos = monomials_up_to(n - 1, 3);
    const std::size_t k = monos.size();
    std::uint64_t base_points = 1;
    for (int i = 0; i < n - 1; ++i) base_points *= q;

    // value matrix: columns give each monomial on the base grid
    std::vector<std::vector<unsigned>> columns(k, std::vector<unsigned>(base_points));
    {
      std::vector<unsigned> y(static_cast<std::size_t>(n - 1), 0);
      for (std::uint64_t row = 0; row < base_points; ++row) {
        for (std::size_t c = 0; c < k; ++c) {
          unsigned v = 1;
          for (int j = 0; j < n - 1; ++j)
            if (monos[c][static_cast<std::size_t>(j)] > 0)
              v = ops.mul(v, ops.pow(y[static_cast<std::size_t>(j)],
                                     static_cast<unsigned>(monos[c][static_cast<std::size_t>(j)])));
          columns[c][row] = v;
        }
        for (int i = n - 2; i >= 0; --i) {
          if (++y[static_cast<std::size_t>(i)] < q) break;
          y[static_cast<std::size_t>(i)] = 0;
        }
      }
    }

    // odometer over coefficient vectors with incremental value updates
    std::vector<unsigned> coeffs(k, 0);
    std::vector<unsigned> values(base_points, 0);
    std::uint64_t zero_count = base_points;
    const std::uint64_t fiber_exponent = q - q / p;  // per moved fiber
    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < k; ++i) {
      total *= q;
      if (total > (1ULL << 40)) overflow = true;
    }
    require(!overflow, Errc::TooManyPoints, "elementary coefficient space too large");
    line.checked = total;

    bool brute_check = total <= 2048;
    for (std::uint64_t step = 0;; ++step) {
      std::uint64_t moved = base_points - zero_count;
      bool even = (fiber_exponent * moved) % 2 == 0;
      if (!even && !line.odd_witness) {
        line.all_even = false;
        line.odd_witness = make_elementary(field, n, 1, offset_poly(field, monos, coeffs, n)).str();
      }
      if (brute_check) {
        MultiPoly s = offset_poly(field, monos, coeffs, n);
        PermRep rep = permutation_of(make_elementary(field, n, 1, s));
        require(rep.bijective && (rep.sign == 1) == even, Errc::Internal,
                "fiber parity formula disagrees with the cycle count");
      }
      if (step + 1 == total) break;
      // increment the coefficient odometer, updating values incrementally
      std::size_t d = k;
      while (d > 0) {
        --d;
        unsigned old = coeffs[d];
        unsigned next = old + 1 == q ? 0 : old + 1;
        coeffs[d] = next;
        unsigned delta = ops.sub(next, old);
        const auto& col = columns[d];
        for (std::uint64_t row = 0; row < base_points; ++row) {
          unsigned before = values[row];
          unsigned after = ops.add(before, ops.mul(delta, col[row]));
          values[row] = after;
          if (before == 0 && after != 0) --zero_count;
          if (before != 0 && after == 0) ++zero_count;
        }
        if (next != 0) break;  // no carry
      }
    }
    report.lines.push_back(line);
  }

  // --- elementary matrices I + c E_{ij} of SL_n ---
  if (n >= 2) {
    CensusLine line{"sl-elementary", 0, true, q > 2, std::nullopt};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (unsigned c = 1; c < q; ++c) {
          ScalarMatrix m(static_cast<std::size_t>(n),
                         std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(field)));
          for (int d = 0; d < n; ++d) m[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] = Scalar::one(field);
          m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = Scalar::of_index(field, c);
          Endo e = Endo::linear(ring, m);
          PermRep rep = permutation_of(e);
          ++line.checked;
          if (rep.sign != 1) {
            line.all_even = false;
            if (!line.odd_witness) line.odd_witness = e.str();
          }
        }
      }
    report.lines.push_back(line);
  }

  // --- the odd witness over GF(2): (x1 + x2 x3 ... xn, x2, ..., xn) ---
  if (q == 2) {
    CensusLine line{"gf2-odd-witness", 1, false, false, std::nullopt};
    Endo w = [&] {
      if (n == 1) {
        return Endo::translation(ring, {Scalar::one(field)});
      }
      MultiPoly prod = MultiPoly::of_int(ring, n, 1);
      for (int i = 2; i <= n; ++i) prod = prod * MultiPoly::variable(ring, n, i);
      return make_elementary(field, n, 1, prod);
    }();
    PermRep rep = permutation_of(w);
    line.all_even = rep.sign == 1;  // expected: odd
    line.odd_witness = w.str();
    report.lines.push_back(line);
  }

  for (const auto& line : report.lines)
    if (line.all_even != line.expected_all_even) report.matches_expectation = false;
  return report;
}

}  // namespace affaut
