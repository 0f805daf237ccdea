#pragma once

#include <optional>
#include <vector>

#include "affaut/endo.hpp"

namespace affaut {

/// One factor of a tame word. Affine factors are x -> Mx + v with M
/// invertible; triangular factors are x_i -> a_i x_i + b_i(x_1,...,x_{i-1})
/// with every a_i nonzero (so b_1 is a constant).
struct TameFactor {
  enum class Kind { Affine, Triangular };
  Kind kind;

  // affine data
  ScalarMatrix matrix;
  std::vector<Scalar> shift;

  // triangular data
  std::vector<Scalar> scale;
  std::vector<MultiPoly> offset;  // offset[i] lives in k[x_1..x_i], 0-based: offset[0] constant

  Endo to_endo(const ParamRing& ring) const;
  Scalar jacobian_unit(const FieldPtr& field) const;  // det(M) or prod a_i

  static TameFactor affine(ScalarMatrix m, std::vector<Scalar> v);
  static TameFactor triangular(std::vector<Scalar> a, std::vector<MultiPoly> b);
};

/// An ordered word of tame factors over a field; the represented map is the
/// composition factors[0] ∘ factors[1] ∘ ... (the last factor acts first).
struct TameWord {
  FieldPtr field;
  int n = 0;
  std::vector<TameFactor> factors;

  Endo evaluate() const;
  Scalar jacobian_unit() const;
};

// --- generator constructors ---
Endo make_translation(const FieldPtr& field, const std::vector<Scalar>& v);
Endo make_linear(const FieldPtr& field, const ScalarMatrix& m);  // raises SingularMatrix
/// x_i += s where s must not involve x_i (and must be parameter-free).
Endo make_elementary(const FieldPtr& field, int n, int i, const MultiPoly& s);
Endo make_triangular(const FieldPtr& field, const std::vector<Scalar>& a,
                     const std::vector<MultiPoly>& b);  // raises ZeroDiagonal

/// Exact inverse of an automorphism over k or k[t], found by normalizing to
/// a map tangent to the identity and solving homogeneous degree by degree.
/// Raises JacobianNotUnit when Jac(f) is not a unit constant, NotInvertible
/// when no inverse closes within the degree cap (default deg(f)^(n-1)).
Endo formal_inverse(const Endo& f, std::optional<long long> degree_cap = std::nullopt);

/// Jung-van der Kulk factorization of a plane automorphism over a field into
/// affine and triangular factors (left-greedy leading-form reduction).
/// Raises NotAutomorphism when the reduction gets stuck or Jac is not a unit.
TameWord jvdk_decompose(const Endo& f);

/// True iff jvdk_decompose succeeds and recomposes to f exactly.
bool is_plane_automorphism(const Endo& f);

/// Rewrites a word with Jacobian-1 product into one whose factors each have
/// Jacobian 1, by merging mutually cancelling diagonal maps into the
/// factors. Raises JacobianNotOne.
TameWord saut_normalize_word(const TameWord& w);

}  // namespace affaut
