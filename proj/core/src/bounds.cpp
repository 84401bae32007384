#include "tnlb/bounds.hpp"

#include <algorithm>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

long to_long(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw InternalError(std::string("overflow in ") + what);
    return z.get_si();
}

// Unimodular W whose first column tau satisfies psi . tau = 1 and whose
// remaining columns span ker psi; exists exactly when psi is primitive.
IntMat tau_splitting(const CohomologyClass& psi) {
    const size_t b = psi.coeffs.size();
    IntMat row(1, b);
    for (size_t j = 0; j < b; ++j) row.at(0, j) = psi.coeffs[j];
    SmithForm s = smith_normal_form(row);
    if (s.d.at(0, 0) != 1)
        throw ConfigError("a primitive class is required here; divide by |psi| first");
    IntMat w = s.v;
    // psi * V = U^{-1} * D = (+-1) * e_1; flip the first column if needed
    mpz_class sign = s.u.at(0, 0);
    if (sign == -1)
        for (size_t i = 0; i < b; ++i) w.at(i, 0) = -w.at(i, 0);
    return w;
}

}  // namespace

std::pair<long, SkewFieldElt> RingHom::of_word(const Word& w) const {
    long e = 0;
    SkewFieldElt c = SkewFieldElt::constant(ring.vars(), Cyclotomic(1));
    for (const Letter& l : w.letters()) {
        auto [le, lc] = images.at(static_cast<size_t>(l.gen));
        if (l.sign < 0) {
            lc = lc.inverse().transformed(ring.alpha(), -le);
            le = -le;
        }
        c = c.transformed(ring.alpha(), le) * lc;
        e += le;
    }
    return {e, c};
}

SkewLaurentPoly RingHom::of_elt(const FreeGroupRingElt& elt) const {
    SkewLaurentPoly out(ring.vars());
    for (const auto& [w, z] : elt.terms()) {
        auto [e, c] = of_word(w);
        out.add_term(e, c * SkewFieldElt::constant(ring.vars(),
                                                   Cyclotomic(mpq_class(z), ring.cyc_order())));
    }
    return out;
}

RingHom build_ring_hom(const GroupPresentation& p, const CohomologyClass& psi,
                       const CoefficientConfig& cfg, const AbelianizationData& ab) {
    if (psi.is_zero()) throw ConfigError("a non-zero cohomology class is required");
    if (psi.coeffs.size() != ab.betti)
        throw ConfigError("cohomology class length does not match b_1");
    const size_t m = p.generator_count();
    const unsigned n = cfg.sigma.order;

    std::vector<std::pair<long, SkewFieldElt>> images;
    images.reserve(m);
    size_t vars = 0;
    MonomialAutomorphism alpha(0);

    switch (cfg.kind) {
        case CoefficientKind::seifert: {
            vars = 0;
            alpha = MonomialAutomorphism(0);
            for (size_t j = 0; j < m; ++j) {
                Word g = Word::generator(static_cast<int>(j));
                long e = to_long(evaluate_class(psi, g, ab), "psi exponent");
                Cyclotomic zc =
                    Cyclotomic::root_power(n, cfg.sigma.exponent_of_word(g, ab));
                images.emplace_back(e, SkewFieldElt::constant(0, zc));
            }
            break;
        }
        case CoefficientKind::alexander_fox: {
            if (divisibility(psi) != 1)
                throw ConfigError("alexander_fox coefficients need a primitive class");
            const size_t b = ab.betti;
            vars = b - 1;
            alpha = MonomialAutomorphism(vars);
            IntMat w = tau_splitting(psi);
            IntMat winv = unimodular_inverse(w);
            for (size_t j = 0; j < m; ++j) {
                Word g = Word::generator(static_cast<int>(j));
                auto free_part = ab.free_of_word(g);
                std::vector<mpz_class> coords(b, mpz_class(0));
                for (size_t r = 0; r < b; ++r)
                    for (size_t cidx = 0; cidx < b; ++cidx)
                        coords[r] += winv.at(r, cidx) * free_part[cidx];
                long e = to_long(coords[0], "psi exponent");
                LaurentPoly::Exp uexp(vars);
                for (size_t r = 1; r < b; ++r)
                    uexp[r - 1] = to_long(coords[r], "coefficient exponent");
                Cyclotomic zc =
                    Cyclotomic::root_power(n, cfg.sigma.exponent_of_word(g, ab));
                images.emplace_back(
                    e, SkewFieldElt::of(LaurentPoly::monomial(vars, uexp, zc)));
            }
            break;
        }
        case CoefficientKind::custom_skew: {
            if (!cfg.custom) throw ConfigError("custom coefficients missing");
            if (divisibility(psi) != 1)
                throw ConfigError("custom coefficients need a primitive class");
            vars = cfg.custom->vars;
            alpha = cfg.custom->alpha;
            if (cfg.custom->images.size() != m)
                throw ConfigError("custom coefficients need one image per generator");
            for (size_t j = 0; j < m; ++j) {
                Word g = Word::generator(static_cast<int>(j));
                long e = to_long(evaluate_class(psi, g, ab), "psi exponent");
                const SkewFieldElt& c = cfg.custom->images[j];
                if (c.is_zero())
                    throw ConfigError("generator images must be units (nonzero)");
                images.emplace_back(e, c);
            }
            break;
        }
    }

    RingHom phi{SkewRing(vars, alpha, n), std::move(images)};
    for (const Word& r : p.relators) {
        auto [e, c] = phi.of_word(r);
        if (e != 0 || !c.is_one())
            throw ConfigError("inconsistent configuration: a relator does not map to 1");
    }
    return phi;
}

TwistedComplex twisted_chain_complex(const GroupPresentation& p, const RingHom& phi) {
    const size_t r = p.relators.size();
    const size_t m = p.generator_count();
    const size_t vars = phi.ring.vars();

    AlexanderMatrix fox = alexander_matrix(p);
    TwistedComplex c{SkewMat(r, m, vars), SkewMat(m, 1, vars)};
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m; ++j) c.d2.at(i, j) = phi.of_elt(fox.at(i, j));
    for (size_t j = 0; j < m; ++j) {
        auto [e, cf] = phi.of_word(Word::generator(static_cast<int>(j)));
        SkewLaurentPoly img(vars);
        img.add_term(e, cf);
        img -= SkewLaurentPoly::one(vars);
        c.d1.at(j, 0) = img;
    }

    // chain condition: phi(d r_i / d x_j) (phi(x_j) - 1) sums to phi(r_i) - 1 = 0
    for (size_t i = 0; i < r; ++i) {
        SkewLaurentPoly acc(vars);
        for (size_t j = 0; j < m; ++j) acc += phi.ring.mul(c.d2.at(i, j), c.d1.at(j, 0));
        if (!acc.is_zero())
            throw InternalError("chain condition failed: d2 . d1 != 0");
    }
    return c;
}

RankStatus h1_rank(const SkewRing& ring, const TwistedComplex& c) {
    DiagonalForm d = diagonalize(ring, c.d2);
    if (d.free_rank == 1) return RankStatus{RankKind::torsion, torsion_rank_over_k(d)};
    if (d.free_rank >= 2) return RankStatus{RankKind::not_fg_over_k, 0};
    return RankStatus{RankKind::inconsistent, 0};
}

Cyclicity detect_cyclic_phi(const GroupPresentation& p, const AbelianizationData& ab,
                            const CohomologyClass& psi_primitive,
                            const CoefficientConfig& cfg) {
    switch (cfg.kind) {
        case CoefficientKind::custom_skew:
            return Cyclicity::undecided;
        case CoefficientKind::alexander_fox:
            return (ab.betti == 1 && cfg.sigma.is_trivial()) ? Cyclicity::cyclic
                                                             : Cyclicity::not_cyclic;
        case CoefficientKind::seifert: {
            // phi(pi) sits in the abelian group Z x Z/n spanned by the
            // generator images (psi value, sigma exponent) together with
            // (0, n). It is cyclic iff the intersection with 0 x Z/n is
            // trivial, read off from a two-row column reduction.
            const unsigned n = cfg.sigma.order;
            std::vector<std::pair<mpz_class, mpz_class>> cols;
            for (size_t j = 0; j < p.generator_count(); ++j) {
                Word g = Word::generator(static_cast<int>(j));
                cols.emplace_back(evaluate_class(psi_primitive, g, ab),
                                  cfg.sigma.exponent_of_word(g, ab));
            }
            cols.emplace_back(0, n);
            // sweep the first row into column 0 by unimodular column ops
            for (size_t j = 1; j < cols.size(); ++j) {
                mpz_class a = cols[0].first, b = cols[j].first;
                if (b == 0) continue;
                mpz_class g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                mpz_class c0f = g;
                mpz_class c0s = x * cols[0].second + y * cols[j].second;
                mpz_class cjf = 0;
                mpz_class cjs = (a / g) * cols[j].second - (b / g) * cols[0].second;
                cols[0] = {c0f, c0s};
                cols[j] = {cjf, cjs};
            }
            mpz_class tau(0);
            for (size_t j = 1; j < cols.size(); ++j) tau = gcd(tau, cols[j].second);
            return (tau % n == 0) ? Cyclicity::cyclic : Cyclicity::not_cyclic;
        }
    }
    return Cyclicity::undecided;
}

BoundReport assemble_bound(const RankStatus& primitive_status, Cyclicity cyclic,
                           SpaceMode mode, int epsilon_manifold,
                           const mpz_class& psi_divisibility) {
    BoundReport rep;
    rep.status = primitive_status.kind;
    rep.cyclic = cyclic;
    rep.mode = mode;
    rep.psi_divisibility = psi_divisibility;

    if (mode == SpaceMode::manifold) {
        if (epsilon_manifold != 1 && epsilon_manifold != 2)
            throw ConfigError("manifold mode needs epsilon 1 or 2");
        rep.epsilon = epsilon_manifold;
    } else {
        rep.epsilon = (cyclic == Cyclicity::cyclic) ? 1 : 0;
    }

    if (primitive_status.kind != RankKind::torsion) return rep;
    if (cyclic == Cyclicity::undecided)
        throw ConfigError(
            "cyclicity of the coefficient image is undecided; supply an assertion");

    mpz_class rank = psi_divisibility * mpz_class(primitive_status.rank);
    rep.rank = static_cast<size_t>(to_long(rank, "rank"));

    mpz_class b;
    if (cyclic == Cyclicity::not_cyclic) {
        b = rank;
    } else {
        b = rank - mpz_class(rep.epsilon) * psi_divisibility;
        if (b < 0) b = 0;
    }
    rep.bound = static_cast<size_t>(to_long(b, "bound"));
    return rep;
}

BoundReport compute_bound(const GroupPresentation& p, const CohomologyClass& psi,
                          const CoefficientConfig& cfg, SpaceMode mode,
                          int epsilon_manifold, bool with_cross_check) {
    AbelianizationData ab = abelianize(p);
    if (psi.is_zero()) throw ConfigError("a non-zero cohomology class is required");
    mpz_class n = divisibility(psi);
    CohomologyClass prim;
    prim.coeffs.reserve(psi.coeffs.size());
    for (const auto& c : psi.coeffs) prim.coeffs.push_back(c / n);

    RingHom phi = build_ring_hom(p, prim, cfg, ab);
    TwistedComplex chain = twisted_chain_complex(p, phi);
    RankStatus status = h1_rank(phi.ring, chain);

    Cyclicity cyc = detect_cyclic_phi(p, ab, prim, cfg);
    if (cyc == Cyclicity::undecided && cfg.custom && cfg.custom->cyclic_assertion)
        cyc = *cfg.custom->cyclic_assertion ? Cyclicity::cyclic : Cyclicity::not_cyclic;

    BoundReport rep = assemble_bound(status, cyc, mode, epsilon_manifold, n);
    if (with_cross_check) {
        LaurentPoly delta = delta_sigma(p, ab, cfg.sigma);
        rep.cross_check = alexander_fox_norm(delta, psi);
    }
    return rep;
}

CrossCheck cross_validate(const GroupPresentation& p, const CohomologyClass& psi,
                          const Character& sigma) {
    AbelianizationData ab = abelianize(p);
    if (psi.is_zero()) throw ConfigError("a non-zero cohomology class is required");
    if (divisibility(psi) != 1)
        throw ConfigError("cross validation runs on primitive classes");

    CoefficientConfig cfg;
    cfg.kind = CoefficientKind::alexander_fox;
    cfg.sigma = sigma;

    RingHom phi = build_ring_hom(p, psi, cfg, ab);
    TwistedComplex chain = twisted_chain_complex(p, phi);
    RankStatus status = h1_rank(phi.ring, chain);

    LaurentPoly delta = delta_sigma(p, ab, sigma);
    mpz_class norm = alexander_fox_norm(delta, psi);

    CrossCheck out;
    out.status = status.kind;
    out.skew_rank = status.rank;
    out.norm_sigma = norm;
    if (status.kind == RankKind::torsion)
        out.equal = (norm == mpz_class(status.rank));
    else if (status.kind == RankKind::not_fg_over_k)
        out.equal = (norm == 0);
    else
        out.equal = false;
    if (!out.equal)
        throw InternalError("cross validation failed: the two computation paths disagree");
    return out;
}

bool fibered_equality_check(const BoundReport& report, const mpz_class& fiber_chi_minus) {
    if (!report.bound) return false;
    return mpz_class(*report.bound) == fiber_chi_minus;
}

}  // namespace tnlb
