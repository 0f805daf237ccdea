#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affaut/field.hpp"

namespace affaut {

/// Exponent data of a single term: a signed t-exponent (negative only in
/// Laurent rings) and nonnegative exponents for x_1..x_n.
struct Monomial {
  int t = 0;
  std::vector<int> x;

  int x_degree() const {
    int d = 0;
    for (int e : x) d += e;
    return d;
  }
  bool operator==(const Monomial& o) const { return t == o.t && x == o.x; }
};

/// Canonical term order: graded lex on the x-exponents (total x-degree first,
/// then lex with x_1 heaviest), t-exponent as the final tiebreak. Ascending;
/// printing walks it in reverse so the leading term comes first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.x_degree(), db = b.x_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.x.size(); ++i)
      if (a.x[i] != b.x[i]) return a.x[i] > b.x[i];  // lex: larger power of earlier var is larger
    return a.t < b.t;
  }
};

/// Sparse exact multivariate polynomial in x_1..x_n over a ParamRing,
/// optionally involving the parameter t (with Laurent exponents when the
/// ring allows them). Terms are kept in canonical graded-lex order with no
/// zero coefficients; equality is structural.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

  MultiPoly(ParamRing ring, int nvars);  // zero polynomial
  static MultiPoly constant(const ParamRing& ring, int nvars, const Scalar& c);
  static MultiPoly of_int(const ParamRing& ring, int nvars, long long v);
  static MultiPoly variable(const ParamRing& ring, int nvars, int i);  // 1-based
  static MultiPoly param(const ParamRing& ring, int nvars, int exp = 1);

  const ParamRing& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;            // no x and no t
  bool is_x_constant() const;          // no x (may involve t)
  Scalar constant_value() const;       // requires is_constant
  bool depends_on_x(int i) const;      // 1-based
  bool depends_on_t() const;

  int x_degree() const;   // total degree in x; -1 for the zero polynomial
  int min_t_exp() const;  // 0 for the zero polynomial
  int max_t_exp() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(int e) const;  // e >= 0

  /// Formal partial derivative with respect to x_i (1-based); exponent
  /// multipliers are reduced into the field, so characteristic-p kills terms.
  MultiPoly derivative(int i) const;

  /// Simultaneous substitution x_i -> images[i] (and t -> *t_image when
  /// given). All images must share one ring, which becomes the result ring
  /// and must have the same base field. A polynomial with t-terms requires
  /// t_image unless the ring kinds agree (then t maps to itself).
  MultiPoly substitute(const std::vector<MultiPoly>& images,
                       const std::optional<MultiPoly>& t_image = std::nullopt) const;

  /// Exact evaluation at a point (and t value when the ring has a parameter).
  Scalar evaluate(const std::vector<Scalar>& point,
                  const std::optional<Scalar>& t_value = std::nullopt) const;

  /// Decomposition p = sum over (j, m) of q_{j,m} t^j with q_{j,m}
  /// x-homogeneous of degree m and t-free. Requires ring kind PolyT.
  std::map<std::pair<int, int>, MultiPoly> bigraded_parts() const;

  MultiPoly x_homogeneous_part(int d) const;
  MultiPoly leading_x_form() const;

  /// Reinterpret over another ring kind (same base field). Narrowing to
  /// PolyT checks t-exponents >= 0; narrowing to None requires t-free.
  MultiPoly cast(RingKind k) const;

  /// Replace t by the scalar t0 (NegativeTPower when t0 = 0 meets a
  /// negative exponent); the result ring is the parameter-free base.
  MultiPoly specialize_t(const Scalar& t0) const;

  std::string str() const;

  /// Coefficient of a monomial (zero scalar when absent).
  Scalar coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);  // accumulates, prunes zeros

 private:
  void check_monomial(const Monomial& m) const;
  ParamRing ring_;
  int nvars_;
  TermMap terms_;
};

inline MultiPoly operator*(const Scalar& c, const MultiPoly& p) { return p * c; }

/// Parse the polynomial grammar: variables x1..x9 and t, integer / fraction /
/// coefficient-list literals, operators + - * / ^ and parentheses. Raises
/// SyntaxError with a position, UnknownVariable, or NegativeTPower.
MultiPoly parse_poly(const std::string& text, const ParamRing& ring, int nvars);

}  // namespace affaut
