#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "affaut/errors.hpp"

namespace affaut {

enum class FieldKind { Rationals, Finite };

class FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

/// Description of an exact coefficient field: either QQ or GF(p^r) with a
/// deterministically chosen irreducible modulus. Instances are immutable and
/// shared; arithmetic on GF elements goes through the element-index interface
/// below.
///
/// A GF(p^r) element is identified with its residue polynomial
/// c_0 + c_1 x + ... + c_{r-1} x^{r-1} and stored as the index
/// c_0 + c_1 p + ... + c_{r-1} p^{r-1} < q. Index arithmetic keeps every
/// value canonical, so structural equality is field equality.
class FieldDesc : public std::enable_shared_from_this<FieldDesc> {
 public:
  /// The rationals (singleton).
  static FieldPtr rationals();

  /// GF(p^r). Requires p prime and p^r <= 2^16; the modulus for r > 1 is the
  /// lexicographically smallest monic irreducible of degree r (smallest when
  /// read as the base-p integer sum c_i p^i). Memoized per (p, r).
  static FieldPtr finite(unsigned p, unsigned r);

  /// Parse "QQ", "GF(q)" or "GF(p^r)".
  static FieldPtr parse(const std::string& tag);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rationals; }
  bool is_finite() const { return kind_ == FieldKind::Finite; }
  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return r_; }
  unsigned cardinality() const { return q_; }  // 0 for QQ

  /// Modulus coefficients c_0..c_r (monic, c_r = 1); size r+1. Empty for QQ
  /// and for prime fields (r = 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  std::string tag() const;  // "QQ", "GF(5)", "GF(2^2)", ...

  bool operator==(const FieldDesc& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
  }
  bool operator!=(const FieldDesc& o) const { return !(*this == o); }

  // --- element-index arithmetic (finite fields only) ---
  unsigned add(unsigned a, unsigned b) const;
  unsigned sub(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;  // raises DivisionByZero on 0
  unsigned pow(unsigned a, unsigned long long e) const;
  unsigned from_int(long long v) const;  // embeds Z -> GF(p^r) through F_p

  /// Base-p digits c_0..c_{r-1} of an element index.
  std::vector<unsigned> digits(unsigned a) const;
  unsigned from_digits(const std::vector<unsigned>& d) const;

 private:
  FieldDesc() = default;
  FieldKind kind_ = FieldKind::Rationals;
  unsigned p_ = 0, r_ = 1, q_ = 0;
  std::vector<unsigned> modulus_;
};

/// An element of a declared field in canonical form: a reduced fraction over
/// QQ, a reduced residue index over GF(p^r). Immutable value type.
class Scalar {
 public:
  Scalar() : Scalar(zero(FieldDesc::rationals())) {}

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar of_int(const FieldPtr& f, long long v);
  static Scalar of_mpq(mpq_class v);                       // over QQ
  static Scalar of_index(const FieldPtr& f, unsigned idx); // over GF

  /// Parse the scalar text format: "a/b" or "a" over QQ; "[c_{r-1},...,c_0]"
  /// or a plain integer over GF(p^r).
  static Scalar parse(const FieldPtr& f, const std::string& text);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// GF element index; only valid for finite fields.
  unsigned index() const { return idx_; }
  /// Rational value; only valid over QQ.
  const mpq_class& rational() const { return rat_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long long e) const;  // negative e inverts first

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: "a/b" (reduced, "/1" omitted) over QQ;
  /// "[c_{r-1},...,c_0]" over GF(p^r).
  std::string str() const;

  /// Rendering used inside polynomial text: plain integer for prime fields,
  /// bracket list for proper extensions, fraction over QQ.
  std::string poly_coeff_str() const;

  bool is_negative() const;  // QQ only; false over GF
  Scalar abs() const;

 private:
  Scalar(FieldPtr f, mpq_class r, unsigned i) : field_(std::move(f)), rat_(std::move(r)), idx_(i) {}
  void ensure_same_field(const Scalar& o) const;
  FieldPtr field_;
  mpq_class rat_;
  unsigned idx_ = 0;
};

enum class RingKind { None, PolyT, LaurentT };

/// Coefficient ring for polynomials and endomorphisms: the base field k,
/// optionally extended to k[t] or k[t,1/t].
struct ParamRing {
  FieldPtr base;
  RingKind kind = RingKind::None;

  bool has_param() const { return kind != RingKind::None; }
  bool operator==(const ParamRing& o) const { return kind == o.kind && *base == *o.base; }
  bool operator!=(const ParamRing& o) const { return !(*this == o); }

  std::string tag() const;  // e.g. "QQ", "QQ[t]", "GF(2^2)[t,1/t]"
  static ParamRing parse(const std::string& tag);
};

inline ParamRing ring_over(FieldPtr f, RingKind k = RingKind::None) { return ParamRing{std::move(f), k}; }

}  // namespace affaut
