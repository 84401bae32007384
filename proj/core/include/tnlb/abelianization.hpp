#pragma once

#include <gmpxx.h>

#include <vector>

#include "tnlb/presentation.hpp"
#include "tnlb/snf.hpp"

namespace tnlb {

/// Structure of H = H_1 of the presentation complex, split as
/// Tors H x G with G free of rank `betti`. The basis of G is fixed by the
/// Smith normal form of the relator exponent matrix, so coordinates are
/// reproducible across runs.
struct AbelianizationData {
    size_t betti = 0;
    std::vector<mpz_class> torsion_orders;  // invariant factors > 1, ascending chain

    /// betti x m matrix: generator exponent vectors -> coordinates on G.
    IntMat free_proj;
    /// one row per torsion factor: generator exponent vectors -> Z/d_i.
    IntMat tors_proj;

    std::vector<mpz_class> free_of_word(const Word& w) const;
    std::vector<mpz_class> tors_of_word(const Word& w) const;  // reduced mod d_i
};

AbelianizationData abelianize(const GroupPresentation& p);

/// Integral class on the chosen basis of G.
struct CohomologyClass {
    std::vector<mpz_class> coeffs;

    bool is_zero() const;
};

/// |psi| = gcd of the coefficients; requires psi != 0.
mpz_class divisibility(const CohomologyClass& psi);

/// psi evaluated on a word through the free projection.
mpz_class evaluate_class(const CohomologyClass& psi, const Word& w,
                         const AbelianizationData& ab);

/// Reconstruct the class from its values on the presentation generators.
/// The values must vanish on every relator (they describe a genuine class);
/// throws ConfigError otherwise.
CohomologyClass class_from_generator_values(const AbelianizationData& ab,
                                            const std::vector<mpz_class>& values);

/// Finite-order character of Tors H, valued in roots of unity: the i-th
/// torsion generator maps to zeta_order^images[i]. Requires
/// d_i * images[i] == 0 (mod order) for each i.
struct Character {
    unsigned order = 1;
    std::vector<long> images;

    Character() = default;
    Character(unsigned order_, std::vector<long> images_,
              const AbelianizationData& ab);
    static Character trivial(const AbelianizationData& ab);

    bool is_trivial() const;

    /// Exponent e with sigma(torsion part of w) = zeta_order^e.
    long exponent_of_word(const Word& w, const AbelianizationData& ab) const;
    long exponent_of_tors(const std::vector<mpz_class>& tors) const;
};

}  // namespace tnlb
