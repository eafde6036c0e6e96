#pragma once

#include <cstddef>

namespace groupsel {

// Relative tolerance for accepting a matrix as Hermitian at construction.
inline constexpr double kHermTolRel = 1e-9;

// Relative threshold lambda_min <= kZeroCertRel * |R|_F^2 certifying that an
// exactly commuting generator exists in the span.  The same constant, scaled
// by |R|_F, accepts a rounded permutation as an exact automorphism.
inline constexpr double kZeroCertRel = 1e-10;

// Deflated basis elements with norm below kDeflationDropTol times their
// pre-deflation norm are discarded as numerically inside the span.
inline constexpr double kDeflationDropTol = 1e-8;

// Eigenvalues within kDegenerateGap of lambda_min count as one eigenspace.
inline constexpr double kDegenerateGap = 1e-12;

// A candidate whose projection onto the current group span exceeds this is
// redundant; below it the candidate is genuinely new.
inline constexpr double kOverlapMin = 1e-12;

// Hard cap on group closure size; exceeding it raises ValidationError.
inline constexpr std::size_t kClosureCap = 10080;

// Largest degree for which exhaustive searches over the symmetric group run.
inline constexpr int kBruteforceMaxDegree = 8;

}  // namespace groupsel
