#pragma once

#include "tnlb/skew_laurent.hpp"

namespace tnlb {

struct SkewMat {
    size_t rows = 0, cols = 0;
    std::vector<SkewLaurentPoly> e;

    SkewMat() = default;
    SkewMat(size_t r, size_t c, size_t vars)
        : rows(r), cols(c), e(r * c, SkewLaurentPoly(vars)) {}
    static SkewMat identity(size_t n, size_t vars);

    SkewLaurentPoly& at(size_t i, size_t j) { return e[i * cols + j]; }
    const SkewLaurentPoly& at(size_t i, size_t j) const { return e[i * cols + j]; }
    bool is_identity() const;
};

SkewMat mat_mul(const SkewRing& ring, const SkewMat& a, const SkewMat& b);

/// U A V = D with U, V invertible over Lambda (inverses carried along as
/// certificates) and D diagonal; `diag` lists the nonzero diagonal entries
/// and free_rank = cols - #diag. No divisibility chain is imposed.
struct DiagonalForm {
    std::vector<SkewLaurentPoly> diag;
    size_t free_rank = 0;
    SkewMat u, u_inv, v, v_inv;
    SkewMat d;
};

DiagonalForm diagonalize(const SkewRing& ring, const SkewMat& a);

/// Rank over the Ore quotient field, computed independently of
/// diagonalize by Gaussian elimination with exact skew fractions.
size_t ore_rank(const SkewRing& ring, const SkewMat& a);

/// K-rank of the torsion part presented by the diagonal form:
/// sum of spans of the nonzero diagonal entries (units contribute 0).
size_t torsion_rank_over_k(const DiagonalForm& d);

/// For A, B over K (t-degree 0), checks the K-rank of the torsion of the
/// module presented by A + t B against min(l, m). Always true; exercised
/// as a property test.
bool harvey_estimate_check(const SkewRing& ring, const std::vector<std::vector<SkewFieldElt>>& a,
                           const std::vector<std::vector<SkewFieldElt>>& b);

}  // namespace tnlb
