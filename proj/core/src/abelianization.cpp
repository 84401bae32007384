#include "tnlb/abelianization.hpp"

#include <algorithm>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

std::vector<mpz_class> word_exponents(const Word& w, size_t m) {
    std::vector<mpz_class> e(m, mpz_class(0));
    auto raw = w.exponents(m);
    for (size_t i = 0; i < m; ++i) e[i] = raw[i];
    return e;
}

std::vector<mpz_class> apply(const IntMat& mat, const std::vector<mpz_class>& x) {
    std::vector<mpz_class> y(mat.rows, mpz_class(0));
    for (size_t i = 0; i < mat.rows; ++i)
        for (size_t j = 0; j < mat.cols; ++j)
            if (mat.at(i, j) != 0 && x[j] != 0) y[i] += mat.at(i, j) * x[j];
    return y;
}

mpz_class mod_positive(const mpz_class& a, const mpz_class& d) {
    mpz_class r = a % d;
    if (r < 0) r += d;
    return r;
}

}  // namespace

AbelianizationData abelianize(const GroupPresentation& p) {
    const size_t m = p.generator_count();
    const size_t r = p.relators.size();

    IntMat rel(r, m);
    for (size_t i = 0; i < r; ++i) {
        auto e = p.relators[i].exponents(m);
        for (size_t j = 0; j < m; ++j) rel.at(i, j) = e[j];
    }

    SmithForm snf = smith_normal_form(rel);

    size_t rank = 0;
    for (size_t i = 0; i < std::min(r, m); ++i)
        if (snf.d.at(i, i) != 0) ++rank;

    AbelianizationData ab;
    ab.betti = m - rank;

    // Coordinates of the quotient come from the column transform: the image
    // of generator j is row j of V, with positions carrying d_i = 1 dropped,
    // d_i > 1 torsion, and positions past the rank free.
    std::vector<size_t> tors_pos;
    for (size_t i = 0; i < rank; ++i) {
        if (snf.d.at(i, i) > 1) {
            ab.torsion_orders.push_back(snf.d.at(i, i));
            tors_pos.push_back(i);
        }
    }

    ab.free_proj = IntMat(ab.betti, m);
    for (size_t k = 0; k < ab.betti; ++k)
        for (size_t j = 0; j < m; ++j) ab.free_proj.at(k, j) = snf.v.at(j, rank + k);

    ab.tors_proj = IntMat(tors_pos.size(), m);
    for (size_t k = 0; k < tors_pos.size(); ++k)
        for (size_t j = 0; j < m; ++j) ab.tors_proj.at(k, j) = snf.v.at(j, tors_pos[k]);

    return ab;
}

std::vector<mpz_class> AbelianizationData::free_of_word(const Word& w) const {
    return apply(free_proj, word_exponents(w, free_proj.cols));
}

std::vector<mpz_class> AbelianizationData::tors_of_word(const Word& w) const {
    auto t = apply(tors_proj, word_exponents(w, tors_proj.cols));
    for (size_t i = 0; i < t.size(); ++i) t[i] = mod_positive(t[i], torsion_orders[i]);
    return t;
}

bool CohomologyClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const mpz_class& c) { return c == 0; });
}

mpz_class divisibility(const CohomologyClass& psi) {
    if (psi.is_zero()) throw ConfigError("a non-zero cohomology class is required");
    mpz_class g(0);
    for (const auto& c : psi.coeffs) g = gcd(g, c);
    return g;
}

mpz_class evaluate_class(const CohomologyClass& psi, const Word& w,
                         const AbelianizationData& ab) {
    auto f = ab.free_of_word(w);
    if (f.size() != psi.coeffs.size())
        throw ConfigError("cohomology class length does not match b_1");
    mpz_class v(0);
    for (size_t i = 0; i < f.size(); ++i) v += psi.coeffs[i] * f[i];
    return v;
}

CohomologyClass class_from_generator_values(const AbelianizationData& ab,
                                            const std::vector<mpz_class>& values) {
    const size_t m = ab.free_proj.cols;
    const size_t b = ab.betti;
    if (values.size() != m) throw ConfigError("one value per generator required");

    // Solve F^T c = values exactly via the Smith form of F^T (m x b).
    IntMat ft(m, b);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < b; ++j) ft.at(i, j) = ab.free_proj.at(j, i);
    SmithForm s = smith_normal_form(ft);

    std::vector<mpz_class> rhs = apply(s.u, values);
    std::vector<mpz_class> y(b, mpz_class(0));
    for (size_t i = 0; i < m; ++i) {
        mpz_class d = (i < b && i < std::min(s.d.rows, s.d.cols)) ? s.d.at(i, i) : mpz_class(0);
        if (d == 0) {
            if (rhs[i] != 0)
                throw ConfigError("values do not come from a cohomology class");
            continue;
        }
        if (rhs[i] % d != 0)
            throw ConfigError("values do not come from a cohomology class");
        y[i] = rhs[i] / d;
    }
    std::vector<mpz_class> c = apply(s.v, y);
    return CohomologyClass{std::move(c)};
}

Character::Character(unsigned order_, std::vector<long> images_,
                     const AbelianizationData& ab)
    : order(order_), images(std::move(images_)) {
    if (order == 0) throw ConfigError("character order must be positive");
    if (images.size() != ab.torsion_orders.size())
        throw ConfigError("character needs one image per torsion factor");
    for (size_t i = 0; i < images.size(); ++i) {
        mpz_class prod = ab.torsion_orders[i] * mpz_class(images[i]);
        if (prod % order != 0)
            throw ConfigError("character image " + std::to_string(i) +
                              " has order not dividing the torsion order");
    }
}

Character Character::trivial(const AbelianizationData& ab) {
    Character s;
    s.order = 1;
    s.images.assign(ab.torsion_orders.size(), 0);
    return s;
}

bool Character::is_trivial() const {
    for (long a : images)
        if (a % static_cast<long>(order) != 0) return false;
    return true;
}

long Character::exponent_of_tors(const std::vector<mpz_class>& tors) const {
    mpz_class e(0);
    for (size_t i = 0; i < images.size(); ++i) e += mpz_class(images[i]) * tors[i];
    e = e % order;
    if (e < 0) e += order;
    return static_cast<long>(e.get_si());
}

long Character::exponent_of_word(const Word& w, const AbelianizationData& ab) const {
    return exponent_of_tors(ab.tors_of_word(w));
}

}  // namespace tnlb
