#pragma once

#include "tnlb/abelianization.hpp"
#include "tnlb/fox.hpp"
#include "tnlb/laurent.hpp"

namespace tnlb {

struct LaurentMat {
    size_t rows = 0, cols = 0;
    std::vector<LaurentPoly> entries;  // row-major

    LaurentMat() = default;
    LaurentMat(size_t r, size_t c, size_t nvars)
        : rows(r), cols(c), entries(r * c, LaurentPoly(nvars)) {}
    LaurentPoly& at(size_t i, size_t j) { return entries[i * cols + j]; }
    const LaurentPoly& at(size_t i, size_t j) const { return entries[i * cols + j]; }
};

/// Exact determinant (cofactor expansion with column-mask memoization;
/// fine at the matrix sizes presentations produce).
LaurentPoly laurent_det(const LaurentMat& m);

/// Generators of the first elementary ideal: all (m-1) x (m-1) minors of a
/// matrix with m columns (columns = module generators, rows = relations).
/// Size-zero minors give {1}; fewer than m-1 rows gives {0}.
std::vector<LaurentPoly> elementary_ideal_gens(const LaurentMat& a, size_t m);

/// The relator Jacobian pushed through abelianization and sigma.
LaurentMat pushed_alexander_matrix(const GroupPresentation& p,
                                   const AbelianizationData& ab, const Character& sigma);

/// gcd of the first elementary ideal of the pushed Jacobian, canonically
/// normalized; the zero polynomial when the ideal is zero.
LaurentPoly delta_sigma(const GroupPresentation& p, const AbelianizationData& ab,
                        const Character& sigma);
LaurentPoly delta_sigma(const GroupPresentation& p, const Character& sigma);

/// max |psi(g) - psi(g')| over the support of delta; 0 when delta = 0.
mpz_class alexander_fox_norm(const LaurentPoly& delta, const CohomologyClass& psi);

}  // namespace tnlb
