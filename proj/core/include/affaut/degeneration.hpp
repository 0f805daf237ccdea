#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "affaut/endo.hpp"

namespace affaut {

struct SampleCheck {
  Scalar t0;
  bool verified = false;
};

/// Everything produced by one run of the degeneration pipeline: the input
/// family g over k[t] with g(0) = id, the slope, the witness direction, the
/// conjugated family h free of negative t-powers, its translation limit at
/// t = 0, and exact sample comparisons at chosen parameter values.
struct DegenerationCertificate {
  Endo input_family;                                  // g
  long long slope_a = 0, slope_b = 1;
  std::vector<Scalar> witness;                        // epsilon
  std::optional<std::vector<Scalar>> tau_direction;   // set by the commutator pipeline
  Endo family;                                        // h
  Endo limit;                                         // h(0)
  bool limit_is_translation = false;
  bool nontrivial = false;
  std::vector<SampleCheck> sample_checks;
};

/// The coprime pair (a, b) with a/b the maximal x-degree / t-degree ratio
/// over the nonzero bigraded parts of g - id. Returns the marker (0, 1)
/// when only x-degree-0 parts exist (g is already a family of translations).
std::pair<long long, long long> slope(const Endo& g);

/// Conjugates g(t^a) by the Laurent translation x_i + t^{-b} eps_i, checks
/// that no negative t-power survives, and specializes at t = 0. Returns
/// (family over k[t], translation limit over k).
std::pair<Endo, Endo> degenerate(const Endo& g, const std::vector<Scalar>& eps);

/// Deterministic witness: the lexicographically first integer vector of
/// coordinate height <= D + 1 (D = max degree of the slope-critical parts)
/// whose limit translation is nonzero. Base field QQ.
std::vector<Scalar> find_witness(const Endo& g,
                                 std::optional<long long> grid_height = std::nullopt);

/// A coordinate translation that fails to commute with f, searched over
/// shifts 1..deg(f)+1 per coordinate; nullopt iff f is itself a translation.
std::optional<Endo> find_noncommuting_translation(const Endo& f);

/// Full pipeline for f in SAut (Jacobian 1, not a translation) over QQ:
/// commutator family with a parameter translation, slope, witness,
/// degeneration, and exact sample checks at each t0.
DegenerationCertificate commutator_pipeline(const Endo& f, const std::vector<Scalar>& samples);

/// Certificate for a family g over k[t] given directly (no commutator step).
DegenerationCertificate degeneration_certificate(const Endo& g, const std::vector<Scalar>& samples,
                                                 std::optional<long long> grid_height = std::nullopt);

/// Conjugation by (t x_1, ..., t x_n): a family over k[t] joining f (t = 1)
/// to its linear part (t = 0). Requires f(0) = 0 and Jac(f) a unit.
Endo alexander_family(const Endo& f);

struct SlnExtraction {
  Endo commutator;        // f = h'^{-1} ∘ beta^{-1} ∘ h' ∘ beta in normalized coordinates
  Endo family;            // alexander_family(f)
  ScalarMatrix limit;     // family at t = 0, a nontrivial elementary matrix
};

/// The construction extracting a nontrivial elementary matrix from an
/// automorphism h moving p to q: normalize (p, q) to (0, e_1), commute with
/// the plane shear fixing both, and degenerate along the Alexander family.
SlnExtraction sln_extraction(const Endo& h, const std::vector<Scalar>& p,
                             const std::vector<Scalar>& q);

}  // namespace affaut
