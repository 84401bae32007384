#include "tnlb/skew_laurent.hpp"

#include <sstream>

#include "tnlb/errors.hpp"

namespace tnlb {

SkewLaurentPoly SkewLaurentPoly::coeff(const SkewFieldElt& a, long t_exp) {
    SkewLaurentPoly p(a.vars());
    p.add_term(t_exp, a);
    return p;
}

SkewLaurentPoly SkewLaurentPoly::one(size_t vars) {
    return coeff(SkewFieldElt::constant(vars, Cyclotomic(1)));
}

long SkewLaurentPoly::min_deg() const {
    if (terms_.empty()) throw InternalError("degree of the zero skew polynomial");
    return terms_.begin()->first;
}

long SkewLaurentPoly::max_deg() const {
    if (terms_.empty()) throw InternalError("degree of the zero skew polynomial");
    return terms_.rbegin()->first;
}

const SkewFieldElt* SkewLaurentPoly::coeff_at(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

void SkewLaurentPoly::add_term(long e, const SkewFieldElt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SkewLaurentPoly SkewLaurentPoly::operator-() const {
    SkewLaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SkewLaurentPoly& SkewLaurentPoly::operator+=(const SkewLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SkewLaurentPoly& SkewLaurentPoly::operator-=(const SkewLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

bool operator==(const SkewLaurentPoly& a, const SkewLaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

SkewLaurentPoly SkewLaurentPoly::shifted(long k) const {
    SkewLaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

std::string SkewLaurentPoly::str(const std::vector<std::string>& u_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str(u_names);
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (c.num().term_count() > 1) cs = "(" + (neg ? "-" : "") + cs + ")", neg = false;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            out << cs;
            continue;
        }
        std::string mono = e == 1 ? "t" : "t^" + std::to_string(e);
        if (cs == "1")
            out << mono;
        else
            out << cs << "*" << mono;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

SkewRing::SkewRing(size_t vars, MonomialAutomorphism alpha, unsigned cyc_order)
    : vars_(vars), alpha_(std::move(alpha)), cyc_order_(cyc_order) {
    if (alpha_.vars() != vars_) throw ConfigError("automorphism has wrong variable count");
}

SkewRing SkewRing::commutative(size_t vars, unsigned cyc_order) {
    return SkewRing(vars, MonomialAutomorphism(vars), cyc_order);
}

SkewLaurentPoly SkewRing::t(long e) const {
    return SkewLaurentPoly::coeff(SkewFieldElt::constant(vars_, Cyclotomic(1)), e);
}

SkewLaurentPoly SkewRing::monomial(long t_exp, const SkewFieldElt& a) const {
    return SkewLaurentPoly::coeff(a, t_exp);
}

SkewLaurentPoly SkewRing::mul(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const {
    SkewLaurentPoly r(vars_);
    for (const auto& [j, b] : g.terms()) {
        for (const auto& [i, a] : f.terms())
            r.add_term(i + j, a.transformed(alpha_, j) * b);
    }
    return r;
}

SkewLaurentPoly SkewRing::scale_right(const SkewLaurentPoly& f, const SkewFieldElt& c) const {
    SkewLaurentPoly r(vars_);
    for (const auto& [e, a] : f.terms()) r.add_term(e, a * c);
    return r;
}

SkewLaurentPoly SkewRing::scale_left(const SkewFieldElt& c, const SkewLaurentPoly& f) const {
    SkewLaurentPoly r(vars_);
    for (const auto& [e, a] : f.terms()) r.add_term(e, c.transformed(alpha_, e) * a);
    return r;
}

SkewLaurentPoly SkewRing::shift_right(const SkewLaurentPoly& f, long k) const {
    SkewLaurentPoly r(vars_);
    for (const auto& [e, a] : f.terms()) r.add_term(e + k, a.transformed(alpha_, k));
    return r;
}

SkewLaurentPoly SkewRing::unit_inverse(const SkewLaurentPoly& f) const {
    if (f.terms().size() != 1)
        throw InternalError("unit_inverse: element is not a single term");
    long m = f.terms().begin()->first;
    const SkewFieldElt& a = f.terms().begin()->second;
    return SkewLaurentPoly::coeff(a.inverse().transformed(alpha_, -m), -m);
}

SkewDivision SkewRing::divide_poly(const SkewLaurentPoly& f, const SkewLaurentPoly& g,
                                   bool right) const {
    if (g.is_zero()) throw ConfigError("skew division by zero");
    SkewLaurentPoly rem = f;
    SkewLaurentPoly quot(vars_);
    const long dg = g.max_deg();
    const SkewFieldElt& b = *g.coeff_at(dg);
    while (!rem.is_zero() && rem.max_deg() >= dg) {
        long d = rem.max_deg() - dg;
        const SkewFieldElt a = *rem.coeff_at(rem.max_deg());
        SkewLaurentPoly piece(vars_);
        if (right) {
            // g * (t^d c): leading coefficient alpha^d(b) c
            SkewFieldElt c = a / b.transformed(alpha_, d);
            piece = SkewLaurentPoly::coeff(c, d);
            rem -= mul(g, piece);
        } else {
            // (t^d c) * g: leading coefficient alpha^{dg}(c) b
            SkewFieldElt c = (a / b).transformed(alpha_, -dg);
            piece = SkewLaurentPoly::coeff(c, d);
            rem -= mul(piece, g);
        }
        quot += piece;
    }
    return SkewDivision{std::move(quot), std::move(rem)};
}

SkewDivision SkewRing::right_divide(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const {
    if (g.is_zero()) throw ConfigError("skew division by zero");
    SkewLaurentPoly ft = f.is_zero() ? f : f.shifted(-f.min_deg());
    SkewLaurentPoly gt = g.shifted(-g.min_deg());
    return divide_poly(ft, gt, /*right=*/true);
}

SkewDivision SkewRing::left_divide(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const {
    if (g.is_zero()) throw ConfigError("skew division by zero");
    SkewLaurentPoly ft = f.is_zero() ? f : f.shifted(-f.min_deg());
    SkewLaurentPoly gt = g.shifted(-g.min_deg());
    return divide_poly(ft, gt, /*right=*/false);
}

std::pair<SkewLaurentPoly, SkewLaurentPoly> SkewRing::common_right_multiple(
    const SkewLaurentPoly& b, const SkewLaurentPoly& c) const {
    if (b.is_zero() || c.is_zero())
        throw InternalError("common right multiple of zero");
    // Extended Euclid inside the right ideal b Lambda + c Lambda, tracking
    // cofactors: every r below satisfies r = b s + c t.
    SkewLaurentPoly r0 = shift_right(b, -b.min_deg());
    SkewLaurentPoly r1 = shift_right(c, -c.min_deg());
    SkewLaurentPoly s0 = t(-b.min_deg()), s1(vars_);
    SkewLaurentPoly t0(vars_), t1 = t(-c.min_deg());
    while (!r1.is_zero()) {
        SkewDivision dv = divide_poly(r0, r1, /*right=*/true);
        SkewLaurentPoly s2 = s0 - mul(s1, dv.quotient);
        SkewLaurentPoly t2 = t0 - mul(t1, dv.quotient);
        r0 = std::move(r1);
        r1 = std::move(dv.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r1 = 0 = b s1 + c t1, so b s1 = c (-t1)
    if (s1.is_zero() || t1.is_zero())
        throw InternalError("common right multiple: zero cofactor");
    return {s1, -t1};
}

SkewLaurentPoly SkewRing::gcrd(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    SkewLaurentPoly r0 = f.shifted(-f.min_deg());
    SkewLaurentPoly r1 = g.shifted(-g.min_deg());
    while (!r1.is_zero()) {
        SkewDivision dv = divide_poly(r0, r1, /*right=*/false);
        r0 = std::move(r1);
        r1 = std::move(dv.remainder);
    }
    return r0;
}

SkewLaurentPoly SkewRing::exact_left_quotient(const SkewLaurentPoly& f,
                                              const SkewLaurentPoly& g) const {
    if (f.is_zero()) return SkewLaurentPoly(vars_);
    // f = q g exactly, allowing the unit shifts the divisions introduce
    SkewDivision dv = left_divide(f, g);
    if (!dv.remainder.is_zero())
        throw InternalError("exact_left_quotient: division not exact");
    // left_divide worked on t^{-mf} f = q' (t^{-mg} g); recover q with
    // f = q g: q = t^{mf} q' t^{-mg} twisted appropriately.
    SkewLaurentPoly q = dv.quotient.shifted(f.min_deg());
    return shift_right(q, -g.min_deg());
}

}  // namespace tnlb
