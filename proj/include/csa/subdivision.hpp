#pragma once

#include <string>
#include <vector>

#include "csa/complex.hpp"

namespace csa {

/// A subdivision of a base complex: the subdivided complex plus the
/// carrier of each result vertex in the base. The carrier of any result
/// simplex is the union of its vertex carriers, which for the
/// constructions here coincides with the smallest base simplex whose
/// subdivision contains it. Carriers of iterated subdivisions are
/// composed eagerly into the original base.
struct Subdivision {
  Complex base;
  Complex result;
  std::vector<Simplex> vertex_carrier;  // result vertex id -> base simplex

  /// Carrier of a result simplex; the empty simplex maps to itself.
  /// Throws InputError if the simplex is not in the result complex.
  Simplex carrier_of(const Simplex& s) const;
};

/// The trivial subdivision: result == base, every vertex its own carrier.
Subdivision identity_subdivision(const Complex& base);

/// Barycentric subdivision: result vertices are the nonempty simplexes
/// of the base, result simplexes are inclusion chains. Result vertices
/// carry no color.
Subdivision barycentric(const Complex& base);

/// Standard chromatic subdivision: result vertices are the pairs
/// (color, face) with the color present in the face; a tuple of such
/// pairs is a simplex iff the faces are ordered by inclusion and every
/// pair whose color occurs in another pair's face is dominated by it.
/// Requires a chromatic base; built facet by facet and glued along
/// shared faces by structural label equality.
Subdivision chromatic_subdivision(const Complex& base);

/// N-fold iteration with carriers composed into the original base.
/// N = 0 yields the identity subdivision.
Subdivision iterate_ch(const Complex& base, int n);
Subdivision iterate_bary(const Complex& base, int n);

struct SubdivisionCheck {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Validates a chromatic subdivision: the result is properly colored,
/// carriers are monotone, and for every base simplex the part of the
/// result carried by it is pure of matching dimension and uses exactly
/// the base simplex's colors.
SubdivisionCheck verify_chromatic_subdivision(const Subdivision& sub);

/// Label given to a chromatic-subdivision vertex (color, face). Faces
/// are identified by their base vertex ids.
std::string chrom_label(int color, const Simplex& face);

/// Label given to a barycentric-subdivision vertex (the face itself).
std::string bary_label(const Simplex& face);

}  // namespace csa
