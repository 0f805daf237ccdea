#pragma once

#include <string>
#include <vector>

#include "affaut/endo.hpp"

namespace affaut {

/// Outcome of verifying one generator identity by exact composition: the
/// composed left side, the closed-form right side, and whether they agree
/// as canonical polynomials (never by sampling).
struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  Endo lhs;
  Endo rhs;
  bool verdict = false;
};

/// Commutator of the coordinate-1 elementary map e_q with the translation by
/// (0, eps_2, ..., eps_n), compared against its closed form
/// (x1 + q(x2+eps_2,...) - q(x2,...), x2, ..., xn). q must not involve x1.
IdentityReport verify_translation_commutator(const MultiPoly& q, const std::vector<Scalar>& eps);

/// The characteristic-2 composition that assembles a linear elementary map
/// from two cubic commutators and one translation; needs a field of
/// characteristic 2 with at least 3 elements.
IdentityReport verify_char2_elementary(const Scalar& theta, const Scalar& mu, const Scalar& nu);

/// Commutator of e_q with the determinant-1 diagonal scaling by
/// (alpha_2, ..., alpha_n), compared against
/// (x1 + alpha_2...alpha_n q(alpha_2 x2,...) - q(x2,...), x2, ..., xn).
IdentityReport verify_scaling_commutator(const MultiPoly& q, const std::vector<Scalar>& alpha);

/// The quadric x1 x3 + x2^2 preserved by the Nagata family.
MultiPoly nagata_quadric(const FieldPtr& field);

/// The Nagata map N_alpha = (x1 - 2a x2 D - a^2 x3 D^2, x2 + a x3 D, x3)
/// with D the preserved quadric.
Endo nagata_map(const Scalar& alpha);

/// (u x1, x2, u^-1 x3), the scaling that conjugates N_alpha to N_{alpha/u}.
Endo nagata_scaling(const Scalar& u);

/// The five exact identities of the Nagata family: quadric preservation,
/// the one-parameter group law, Jacobian 1, conjugation by the scaling, and
/// the normal-closure relation. u must be nonzero.
std::vector<IdentityReport> nagata_suite(const Scalar& alpha, const Scalar& beta, const Scalar& u);

}  // namespace affaut
