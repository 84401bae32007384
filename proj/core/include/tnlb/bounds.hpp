#pragma once

#include <optional>

#include "tnlb/abelianization.hpp"
#include "tnlb/alexander.hpp"
#include "tnlb/fox.hpp"
#include "tnlb/presentation.hpp"
#include "tnlb/skew_matrix.hpp"

namespace tnlb {

enum class CoefficientKind { seifert, alexander_fox, custom_skew };

/// User-supplied skew coefficient data: the automorphism and one field
/// coefficient per generator (the t-exponent of each image is forced to
/// psi(x_i) by compatibility).
struct CustomSkewSpec {
    size_t vars = 0;
    MonomialAutomorphism alpha{0};
    std::vector<SkewFieldElt> images;
    std::optional<bool> cyclic_assertion;
};

struct CoefficientConfig {
    CoefficientKind kind = CoefficientKind::seifert;
    Character sigma;
    std::optional<CustomSkewSpec> custom;
};

/// Ring homomorphism from the group ring into Lambda determined by unit
/// images t^{psi(x_i)} c_i of the generators.
struct RingHom {
    SkewRing ring;
    std::vector<std::pair<long, SkewFieldElt>> images;

    /// phi of a word, as the monomial pair (t-exponent, coefficient).
    std::pair<long, SkewFieldElt> of_word(const Word& w) const;
    SkewLaurentPoly of_elt(const FreeGroupRingElt& e) const;
};

/// Builds phi for the requested coefficient configuration and verifies the
/// relator images are 1. psi must be primitive (callers handle |psi|).
RingHom build_ring_hom(const GroupPresentation& p, const CohomologyClass& psi,
                       const CoefficientConfig& cfg, const AbelianizationData& ab);

struct TwistedComplex {
    SkewMat d2;  // relators x generators, phi of the Fox Jacobian
    SkewMat d1;  // generators x 1, entries phi(x_i) - 1
};

/// Chain complex of the presentation complex with Lambda coefficients;
/// throws InternalError if the chain condition d2 . d1 = 0 fails.
TwistedComplex twisted_chain_complex(const GroupPresentation& p, const RingHom& phi);

enum class RankKind { torsion, not_fg_over_k, inconsistent };

struct RankStatus {
    RankKind kind = RankKind::inconsistent;
    size_t rank = 0;  // K-rank of the torsion, valid when kind == torsion
};

/// Rank of H_1 with Lambda coefficients from the diagonal form of d2: the
/// relative module carries one free Lambda summand, so free rank 1 means
/// torsion H_1 of K-rank sum-of-spans, free rank >= 2 means H_1 is not
/// finitely generated over K, and free rank 0 signals broken input.
RankStatus h1_rank(const SkewRing& ring, const TwistedComplex& c);

enum class Cyclicity { cyclic, not_cyclic, undecided };

/// Whether phi(pi_1) is a cyclic subgroup of the units. Decided exactly
/// for the built-in constructions; custom coefficients are undecided and
/// rely on the job's assertion.
Cyclicity detect_cyclic_phi(const GroupPresentation& p, const AbelianizationData& ab,
                            const CohomologyClass& psi_primitive,
                            const CoefficientConfig& cfg);

enum class SpaceMode { manifold, complex_2d };

struct BoundReport {
    RankKind status = RankKind::inconsistent;
    size_t rank = 0;  // scaled by |psi|; valid when status == torsion
    Cyclicity cyclic = Cyclicity::undecided;
    SpaceMode mode = SpaceMode::manifold;
    int epsilon = 1;  // epsilon (manifold) or the cyclicity indicator (complex)
    mpz_class psi_divisibility;
    std::optional<size_t> bound;           // absent unless status == torsion
    std::optional<mpz_class> cross_check;  // commutative-path norm when requested
};

/// Combines a primitive-class rank with divisibility and the cyclicity
/// dichotomy into the final lower bound.
BoundReport assemble_bound(const RankStatus& primitive_status, Cyclicity cyclic,
                           SpaceMode mode, int epsilon_manifold,
                           const mpz_class& psi_divisibility);

/// Full pipeline: abelianize, split off |psi|, build phi, compute the rank
/// and the dichotomy, assemble the report.
BoundReport compute_bound(const GroupPresentation& p, const CohomologyClass& psi,
                          const CoefficientConfig& cfg, SpaceMode mode,
                          int epsilon_manifold, bool with_cross_check = false);

struct CrossCheck {
    RankKind status = RankKind::inconsistent;
    size_t skew_rank = 0;
    mpz_class norm_sigma;
    bool equal = false;
};

/// Runs the skew-field rank and the commutative gcd paths on a primitive
/// class and compares them; throws InternalError on disagreement.
CrossCheck cross_validate(const GroupPresentation& p, const CohomologyClass& psi,
                          const Character& sigma);

/// Equality test against user-supplied fiber data.
bool fibered_equality_check(const BoundReport& report, const mpz_class& fiber_chi_minus);

}  // namespace tnlb
