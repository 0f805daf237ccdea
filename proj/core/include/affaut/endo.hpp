#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affaut/multipoly.hpp"

namespace affaut {

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// An endomorphism of affine n-space over a declared ring, stored as its
/// component polynomials. Composition follows the fixed global convention
/// compose(f, g) = f after g: component i of the result is f_i(g_1,...,g_n).
class Endo {
 public:
  Endo(ParamRing ring, std::vector<MultiPoly> components);

  static Endo identity(const ParamRing& ring, int n);
  static Endo translation(const ParamRing& ring, const std::vector<Scalar>& v);
  static Endo linear(const ParamRing& ring, const ScalarMatrix& m);  // raises SingularMatrix? no: any matrix

  const ParamRing& ring() const { return ring_; }
  int n() const { return n_; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  const MultiPoly& component(int i) const { return comps_[static_cast<std::size_t>(i - 1)]; }

  bool operator==(const Endo& o) const { return ring_ == o.ring_ && comps_ == o.comps_; }
  bool operator!=(const Endo& o) const { return !(*this == o); }

  bool is_identity() const;
  bool is_translation() const;  // includes the identity
  std::vector<Scalar> translation_vector() const;

  /// Max total x-degree over the components (the identity has degree 1).
  int degree() const;

  std::vector<Scalar> evaluate(const std::vector<Scalar>& point,
                               const std::optional<Scalar>& t_value = std::nullopt) const;

  /// Image of the origin: the constant terms. Requires them t-free unless a
  /// parameter ring is fine for the caller (they stay MultiPoly there).
  std::vector<MultiPoly> origin_image() const;

  /// Replace t throughout by the given polynomial (e.g. t^a).
  Endo substitute_t(const MultiPoly& t_image) const;

  /// Replace t by a field element; the result lives over the base field.
  Endo specialize_t(const Scalar& t0) const;

  /// Reinterpret over another ring kind (same base field); narrowing checks.
  Endo cast(RingKind k) const;

  std::string str() const;  // "(p1, ..., pn) over RING"

 private:
  ParamRing ring_;
  int n_;
  std::vector<MultiPoly> comps_;
};

/// f ∘ g ("g first"): substitutes g's components into f.
Endo compose(const Endo& f, const Endo& g);

/// Entry (i, j) is the partial derivative of f_i with respect to x_j.
PolyMatrix derivative_matrix(const Endo& f);

/// det(Df), expanded exactly by cofactors (n <= 6).
MultiPoly jacobian(const Endo& f);

/// Exact verification of D(f∘g) = (Df after g) * Dg.
bool chain_rule_check(const Endo& f, const Endo& g);

/// Degree-<=1 truncation data of a parameter-free endomorphism: the matrix
/// Df at the origin and the translation vector f(0).
std::pair<ScalarMatrix, std::vector<Scalar>> linear_part(const Endo& f);

/// Cofactor determinant of a square polynomial matrix, n <= 6.
MultiPoly poly_det(const PolyMatrix& m);

// small exact linear algebra over the scalar field
Scalar matrix_det(const ScalarMatrix& m);
ScalarMatrix matrix_inverse(const ScalarMatrix& m);  // raises SingularMatrix
ScalarMatrix matrix_mul(const ScalarMatrix& a, const ScalarMatrix& b);
bool matrix_is_identity(const ScalarMatrix& m);

/// Parse "(p1, ..., pn)" with an optional trailing "over RING"; the ring
/// argument supplies the ring when the clause is absent.
Endo parse_endo(const std::string& text, const std::optional<ParamRing>& ring = std::nullopt);

}  // namespace affaut
