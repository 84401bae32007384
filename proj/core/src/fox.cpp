#include "tnlb/fox.hpp"

namespace tnlb {

FreeGroupRingElt FreeGroupRingElt::single(const Word& w, const mpz_class& c) {
    FreeGroupRingElt e;
    e.add_term(w, c);
    return e;
}

void FreeGroupRingElt::add_term(const Word& w, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

FreeGroupRingElt FreeGroupRingElt::operator-() const {
    FreeGroupRingElt r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreeGroupRingElt& FreeGroupRingElt::operator+=(const FreeGroupRingElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeGroupRingElt& FreeGroupRingElt::operator-=(const FreeGroupRingElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeGroupRingElt operator*(const FreeGroupRingElt& a, const FreeGroupRingElt& b) {
    FreeGroupRingElt r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

FreeGroupRingElt fox_derivative(const Word& w, int j) {
    // Linear expansion of the Leibniz rule over the letters: the letter at
    // position i contributes prefix * d(letter)/dx_j.
    FreeGroupRingElt out;
    const auto& letters = w.letters();
    for (size_t i = 0; i < letters.size(); ++i) {
        const Letter& l = letters[i];
        if (l.gen != j) continue;
        Word prefix = w.prefix(i);
        if (l.sign > 0) {
            out.add_term(prefix, 1);
        } else {
            out.add_term(prefix * Word::generator(l.gen, -1), -1);
        }
    }
    return out;
}

AlexanderMatrix alexander_matrix(const GroupPresentation& p) {
    AlexanderMatrix m;
    m.rows = p.relators.size();
    m.cols = p.generator_count();
    m.entries.resize(m.rows * m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            m.entries[i * m.cols + j] = fox_derivative(p.relators[i], static_cast<int>(j));
    return m;
}

LaurentPoly push_abelian(const FreeGroupRingElt& e, const AbelianizationData& ab,
                         const Character& sigma) {
    LaurentPoly out(ab.betti);
    for (const auto& [w, c] : e.terms()) {
        auto free_part = ab.free_of_word(w);
        LaurentPoly::Exp exp(ab.betti);
        for (size_t i = 0; i < ab.betti; ++i) {
            if (!free_part[i].fits_slong_p())
                throw InternalError("push_abelian: exponent overflow");
            exp[i] = free_part[i].get_si();
        }
        Cyclotomic coeff = Cyclotomic::root_power(sigma.order,
                                                  sigma.exponent_of_word(w, ab));
        coeff *= Cyclotomic(mpq_class(c), sigma.order);
        out.add_term(exp, coeff);
    }
    return out;
}

}  // namespace tnlb
