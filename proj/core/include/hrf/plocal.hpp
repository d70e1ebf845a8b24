#pragma once

#include <optional>
#include <vector>

#include "hrf/matrix.hpp"

// Linear algebra over the discrete valuation ring Z_(p). Lattices are given by
// generating columns with rational entries; every elimination step uses a
// pivot of minimal valuation so that all multipliers stay in Z_(p).

namespace hrf::plocal {

/// Canonical column basis of the Z_(p)-span of the columns: lower echelon
/// shape, pivots p^v, entries left of each pivot reduced to [0, p^v).
Matrix lattice_basis(const Matrix& generators, unsigned long p);

/// Valuations of the elementary divisors (Smith invariants) of a, ascending.
std::vector<long> elementary_divisor_valuations(const Matrix& a, unsigned long p);

/// Basis of Z_(p)^n intersected with the Q-span of the columns, in lattice_basis form.
Matrix saturation(const Matrix& span_columns, unsigned long p);

/// Coordinates X with basis * X = vectors; nullopt if some vector lies outside
/// the lattice (non-integral X) or outside the span.
std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& vectors, unsigned long p);

/// A subset of the generating columns forming a basis of the lattice they span
/// (Nakayama: earliest columns independent modulo p).
Matrix basis_from_generators(const Matrix& generators, unsigned long p);

bool same_lattice(const Matrix& a, const Matrix& b, unsigned long p);

/// True when every entry lies in Z_(p).
bool is_integral(const Matrix& a, unsigned long p);

/// Minimum entry valuation (kInfiniteValuation for the zero matrix).
long min_valuation(const Matrix& a, unsigned long p);

}  // namespace hrf::plocal
