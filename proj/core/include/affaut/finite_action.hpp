#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "affaut/endo.hpp"

namespace affaut {

/// The permutation of the finite point set GF(q)^n induced by evaluating an
/// endomorphism everywhere. Point index i encodes the tuple with x_1 most
/// significant: i = idx(a_1) q^{n-1} + ... + idx(a_n), following the
/// canonical element order of the field (residue index order).
struct PermRep {
  FieldPtr field;
  int n = 0;
  std::uint64_t npoints = 0;
  std::vector<std::uint32_t> image;
  bool bijective = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cycle_type;  // (length, count), ascending
  int sign = 0;  // +1 / -1 when bijective, else 0
};

std::uint64_t point_count(const FieldPtr& field, int n);
std::vector<Scalar> point_of_index(const FieldPtr& field, int n, std::uint64_t index);
std::uint64_t index_of_point(const std::vector<Scalar>& point);

/// Sign from the cycle count of a bijective image table: (-1)^(N - #cycles).
int table_sign(const std::vector<std::uint32_t>& image);

/// Evaluate f at every point of GF(q)^n (cap 10^7 points). Non-bijective
/// endomorphisms are flagged rather than rejected.
PermRep permutation_of(const Endo& f);

std::uint64_t fixed_locus_count(const Endo& f);

/// One line of the parity census: a family of maps, whether every member
/// acted evenly, and an explicit odd witness when one exists.
struct CensusLine {
  std::string family;
  std::uint64_t checked = 0;
  bool all_even = true;
  bool expected_all_even = true;
  std::optional<std::string> odd_witness;
};

/// Exhaustive parity verification over GF(q)^n for translations, elementary
/// maps of offset degree <= 3, elementary matrices of determinant 1, and the
/// explicit odd witness over GF(2). Elementary offsets are enumerated
/// incrementally through their value tables, so the full coefficient space
/// is covered even when it is large.
struct CensusReport {
  FieldPtr field;
  int n = 0;
  std::vector<CensusLine> lines;
  bool matches_expectation = true;
};

CensusReport even_action_census(const FieldPtr& field, int n);

}  // namespace affaut
