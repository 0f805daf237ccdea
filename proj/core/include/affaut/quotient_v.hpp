#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "affaut/endo.hpp"

namespace affaut {

/// Expansion of a univariate polynomial over GF(q) on the basis
/// x^i R^j (0 <= i < q, j >= 0) with R = x^q - x: strata[j] holds the
/// degree-< q digit polynomial of stratum j as dense element indices.
struct MExpansion {
  FieldPtr field;
  std::vector<std::vector<unsigned>> strata;
};

MExpansion to_m_basis(const MultiPoly& s);
MultiPoly from_m_basis(const MExpansion& e);  // recomposition (exact inverse)

/// One generator s - a s(ax + b) restricted to a stratum, recorded for
/// membership certificates.
struct VGenerator {
  int i = 0;       // digit exponent
  int j = 0;       // stratum
  unsigned a = 1;  // element index, nonzero
  unsigned b = 0;  // element index
};

/// Row-reduced bases of the stratum slices of V. The generators
/// x^i R^j - a^{j+1} (ax+b)^i R^j stay inside stratum j with triangular
/// leading coefficient 1 - a^{i+j+1}, so V splits stratum by stratum and a
/// finite truncation decides membership exactly. Construction is memoized
/// per (field, J); q is capped at 64 to bound the q^3-generator elimination.
class VBasis {
 public:
  static std::shared_ptr<const VBasis> get(const FieldPtr& field, int strata_count);

  struct Reduction {
    std::vector<unsigned> remainder;                          // canonical digit remainder
    std::vector<std::pair<VGenerator, unsigned>> combination; // used when remainder is zero-free
  };
  Reduction reduce(int stratum, const std::vector<unsigned>& digit) const;
  const FieldPtr& field() const { return field_; }
  int strata_count() const { return static_cast<int>(strata_.size()); }

 private:
  struct EchelonRow {
    std::vector<unsigned> vec;  // pivot normalized to 1
    int pivot;                  // highest nonzero position
    std::vector<std::pair<VGenerator, unsigned>> combination;
  };
  struct Stratum {
    std::vector<EchelonRow> rows;
  };
  FieldPtr field_;
  std::vector<Stratum> strata_;
  void build(int strata_count);
};

/// Canonical representative of a class in k[x]/V: the stratum-wise echelon
/// remainder, recomposed. The zero representative certifies membership.
struct VClass {
  FieldPtr field;
  MultiPoly rep;  // univariate, parameter-free
  bool is_zero() const { return rep.is_zero(); }
  bool operator==(const VClass& o) const { return rep == o.rep; }
  bool operator!=(const VClass& o) const { return !(*this == o); }
};

VClass v_class_of(const MultiPoly& s);
VClass v_class_add(const VClass& a, const VClass& b);
VClass v_class_zero(const FieldPtr& field);

struct VMembership {
  bool member = false;
  int strata_used = 0;
  std::vector<std::pair<VGenerator, unsigned>> combination;  // when member
  MultiPoly remainder;                                       // canonical representative
};

/// Decide s in V by stratum-wise row reduction against the full generator
/// set; J only pads empty strata beyond deg(s)/q and never changes the
/// verdict (the strata are independent).
VMembership v_membership(const MultiPoly& s, std::optional<int> stratum_bound = std::nullopt);

/// Linear independence of the classes of x^{q-1} R^{m(q-1)-1}, m = 1..M.
bool independence_check(const FieldPtr& field, int m_count);

/// The quotient homomorphism on SAut of the plane over GF(q): factor through
/// affine/triangular words, send a triangular factor (a x1 + b, a^{-1} x2 +
/// s(x1)) to the class of s, an affine factor to zero (q > 2) or to the
/// class of x times its permutation parity (q = 2). With mod_linear the
/// class is further reduced modulo the span of x (GF(2) variant target).
VClass rho(const Endo& f, bool mod_linear = false);

}  // namespace affaut
