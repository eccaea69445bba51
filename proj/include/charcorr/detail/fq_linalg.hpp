#pragma once

// Dense linear algebra over a prime field, used by the modular phase of the
// character-table computation.

#include <cstdint>
#include <vector>

#include "charcorr/exact.hpp"

namespace charcorr::detail {

using FqVec = std::vector<std::uint64_t>;
using FqMat = std::vector<FqVec>;  // row-major

/// In-place reduced row echelon form; returns pivot columns. Zero rows are
/// removed.
std::vector<std::size_t> rref(const Fq& f, FqMat& rows);

/// Basis (as rows) of {x : a x = 0}.
FqMat nullspace(const Fq& f, const FqMat& a);

/// Characteristic polynomial det(xI - a), low degree first, monic.
FqVec charpoly(const Fq& f, FqMat a);

std::uint64_t poly_eval(const Fq& f, const FqVec& poly, std::uint64_t x);

/// Determinant by elimination.
std::uint64_t determinant(const Fq& f, FqMat a);

}  // namespace charcorr::detail
