#include "tnlb/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

void check_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars())
        throw InternalError("laurent: variable count mismatch");
}

}  // namespace

LaurentPoly LaurentPoly::constant(size_t nvars, const Cyclotomic& c) {
    LaurentPoly p(nvars);
    p.set(Exp(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(size_t nvars, Exp e, const Cyclotomic& c) {
    LaurentPoly p(nvars);
    if (e.size() != nvars) throw InternalError("laurent: bad exponent length");
    p.set(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exp(nvars_, 0);
}

void LaurentPoly::set(const Exp& e, const Cyclotomic& c) {
    if (e.size() != nvars_) throw InternalError("laurent: bad exponent length");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void LaurentPoly::add_term(const Exp& e, const Cyclotomic& c) {
    if (e.size() != nvars_) throw InternalError("laurent: bad exponent length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a, b);
    LaurentPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            LaurentPoly::Exp e(a.nvars_);
            for (size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& c) const {
    LaurentPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ita = a.terms_.begin();
    auto itb = b.terms_.begin();
    for (; ita != a.terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (!(ita->second == itb->second)) return false;
    }
    return true;
}

LaurentPoly::Exp LaurentPoly::min_exponents() const {
    Exp m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly::Exp LaurentPoly::max_exponents() const {
    Exp m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::translated(const Exp& shift) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exp ne(nvars_);
        for (size_t i = 0; i < nvars_; ++i) ne[i] = e[i] + shift[i];
        r.terms_.emplace(ne, c);
    }
    return r;
}

bool LaurentPoly::rational_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_rational(); });
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return *this;
    Exp mins = min_exponents();
    for (auto& m : mins) m = -m;
    LaurentPoly p = translated(mins);
    if (p.rational_coeffs()) {
        // scale to coprime integer coefficients, first coefficient positive
        mpz_class num_gcd(0), den_lcm(1);
        for (const auto& [e, c] : p.terms_) {
            mpq_class q = c.rational_value();
            num_gcd = gcd(num_gcd, mpz_class(q.get_num()));
            den_lcm = lcm(den_lcm, mpz_class(q.get_den()));
        }
        mpq_class scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (p.terms_.begin()->second.rational_value() < 0) scale = -scale;
        return p.scaled(Cyclotomic(scale));
    }
    return p.scaled(p.terms_.begin()->second.inverse());
}

bool LaurentPoly::is_associate(const LaurentPoly& o) const {
    return normalized() == o.normalized();
}

std::string LaurentPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += var_names.at(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        bool neg = false;
        std::string coeff;
        if (c.is_rational()) {
            mpq_class q = c.rational_value();
            neg = q < 0;
            if (neg) q = -q;
            if (q != 1 || mono.empty()) coeff = q.get_str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        out << coeff;
        if (!coeff.empty() && !mono.empty()) out << "*";
        out << mono;
        first = false;
    }
    return out.str();
}

std::vector<std::string> default_var_names(size_t nvars, const std::string& stem) {
    std::vector<std::string> names;
    if (nvars == 1) {
        names.push_back(stem);
        return names;
    }
    for (size_t i = 1; i <= nvars; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

// ---------------------------------------------------------------------------
// division and gcd
// ---------------------------------------------------------------------------

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
    check_vars(f, g);
    if (g.is_zero()) return std::nullopt;
    const size_t n = f.nvars();
    if (f.is_zero()) return LaurentPoly(n);

    LaurentPoly::Exp fmin = f.min_exponents(), gmin = g.min_exponents();
    LaurentPoly::Exp neg_f = fmin, neg_g = gmin;
    for (auto& x : neg_f) x = -x;
    for (auto& x : neg_g) x = -x;
    LaurentPoly rem = f.translated(neg_f);
    LaurentPoly div = g.translated(neg_g);

    const auto& glead = *div.terms().rbegin();
    LaurentPoly q(n);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        LaurentPoly::Exp e(n);
        for (size_t i = 0; i < n; ++i) {
            e[i] = rlead.first[i] - glead.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Cyclotomic c = rlead.second / glead.second;
        LaurentPoly t = LaurentPoly::monomial(n, e, c);
        q += t;
        rem -= t * div;
    }
    LaurentPoly::Exp shift(n);
    for (size_t i = 0; i < n; ++i) shift[i] = fmin[i] - gmin[i];
    return q.translated(shift);
}

namespace {

// Views a polynomial (nonnegative exponents) as univariate in variable 0
// with coefficients in the ring of polynomials in the remaining variables.
using Coef = LaurentPoly;  // nvars - 1 variables
using UniView = std::map<long, Coef>;

UniView to_view(const LaurentPoly& p) {
    UniView v;
    const size_t n = p.nvars();
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly::Exp tail(e.begin() + 1, e.end());
        auto it = v.find(e[0]);
        if (it == v.end()) it = v.emplace(e[0], Coef(n - 1)).first;
        it->second.add_term(tail, c);
    }
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
    return v;
}

LaurentPoly from_view(const UniView& v, size_t nvars) {
    LaurentPoly p(nvars);
    for (const auto& [d, coef] : v)
        for (const auto& [e, c] : coef.terms()) {
            LaurentPoly::Exp full(nvars);
            full[0] = d;
            std::copy(e.begin(), e.end(), full.begin() + 1);
            p.add_term(full, c);
        }
    return p;
}

long view_deg(const UniView& v) { return v.empty() ? -1 : v.rbegin()->first; }

const Coef& view_lc(const UniView& v) { return v.rbegin()->second; }

UniView view_scale(const UniView& v, const Coef& c) {
    UniView r;
    for (const auto& [d, coef] : v) {
        Coef p = coef * c;
        if (!p.is_zero()) r.emplace(d, std::move(p));
    }
    return r;
}

UniView view_sub(UniView a, const UniView& b) {
    for (const auto& [d, coef] : b) {
        auto it = a.find(d);
        if (it == a.end()) {
            Coef neg = -coef;
            a.emplace(d, std::move(neg));
        } else {
            it->second -= coef;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

UniView view_shift_mul(const UniView& v, long k, const Coef& c) {
    UniView r;
    for (const auto& [d, coef] : v) {
        Coef p = coef * c;
        if (!p.is_zero()) r.emplace(d + k, std::move(p));
    }
    return r;
}

UniView view_divide_exact(const UniView& v, const Coef& c) {
    UniView r;
    for (const auto& [d, coef] : v) {
        auto q = exact_divide(coef, c);
        if (!q) throw InternalError("laurent gcd: inexact coefficient division");
        if (!q->is_zero()) r.emplace(d, std::move(*q));
    }
    return r;
}

LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g);

Coef view_content(const UniView& v) {
    Coef c(v.empty() ? 0 : v.begin()->second.nvars());
    bool first = true;
    for (const auto& [d, coef] : v) {
        if (first) {
            c = coef;
            first = false;
        } else {
            c = poly_gcd(c, coef);
        }
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c.normalized();
}

// lc(B)^(degA - degB + 1) * A = Q * B + R; returns R.
UniView pseudo_rem(UniView a, const UniView& b) {
    const Coef& lcb = view_lc(b);
    long e = view_deg(a) - view_deg(b) + 1;
    while (!a.empty() && view_deg(a) >= view_deg(b)) {
        const Coef lca = view_lc(a);
        long k = view_deg(a) - view_deg(b);
        a = view_sub(view_scale(a, lcb), view_shift_mul(b, k, lca));
        --e;
    }
    Coef mult = LaurentPoly::constant(lcb.nvars(), Cyclotomic(1));
    for (long i = 0; i < e; ++i) mult *= lcb;
    return e > 0 ? view_scale(a, mult) : a;
}

Coef coef_pow(const Coef& c, long k) {
    Coef r = LaurentPoly::constant(c.nvars(), Cyclotomic(1));
    for (long i = 0; i < k; ++i) r *= c;
    return r;
}

// Subresultant polynomial remainder sequence on primitive inputs.
LaurentPoly prs_gcd(UniView a, UniView b, size_t nvars) {
    if (view_deg(a) < view_deg(b)) std::swap(a, b);
    const size_t cn = nvars - 1;
    Coef g = LaurentPoly::constant(cn, Cyclotomic(1));
    Coef h = g;
    for (;;) {
        long delta = view_deg(a) - view_deg(b);
        UniView r = pseudo_rem(a, b);
        if (r.empty()) break;
        if (view_deg(r) == 0) {
            // constant (in the main variable) remainder: primitive parts coprime
            return LaurentPoly::constant(nvars, Cyclotomic(1));
        }
        Coef divisor = g * coef_pow(h, delta);
        a = std::move(b);
        b = view_divide_exact(r, divisor);
        g = view_lc(a);
        if (delta > 0) {
            auto q = exact_divide(coef_pow(g, delta), coef_pow(h, delta - 1));
            if (!q) throw InternalError("laurent gcd: subresultant bookkeeping");
            h = *q;
        }
    }
    // primitive part of b
    Coef cont = view_content(b);
    UniView pp = view_divide_exact(b, cont);
    return from_view(pp, nvars);
}

// gcd of polynomials with nonnegative exponents; result not normalized.
LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const size_t n = f.nvars();
    if (n == 0 || (f.is_constant() || g.is_constant()))
        return LaurentPoly::constant(n, Cyclotomic(1));

    UniView a = to_view(f), b = to_view(g);
    if (view_deg(a) == 0 && view_deg(b) == 0 && a.begin()->first == 0 &&
        b.begin()->first == 0) {
        // variable 0 absent from both: recurse on the tails
        LaurentPoly sub = poly_gcd(a.begin()->second, b.begin()->second);
        UniView lifted;
        lifted.emplace(0, std::move(sub));
        return from_view(lifted, n);
    }

    if (n == 1) {
        // univariate Euclid over the coefficient field
        while (!b.empty()) {
            // monic remainder step
            UniView rem = a;
            while (!rem.empty() && view_deg(rem) >= view_deg(b)) {
                Cyclotomic c = view_lc(rem).terms().begin()->second /
                               view_lc(b).terms().begin()->second;
                long k = view_deg(rem) - view_deg(b);
                rem = view_sub(rem,
                               view_shift_mul(b, k, Coef::constant(0, c)));
            }
            a = std::move(b);
            b = std::move(rem);
        }
        return from_view(a, 1);
    }

    Coef cf = view_content(a), cg = view_content(b);
    UniView pa = view_divide_exact(a, cf);
    UniView pb = view_divide_exact(b, cg);
    LaurentPoly pp = prs_gcd(std::move(pa), std::move(pb), n);
    LaurentPoly cont = poly_gcd(cf, cg);
    UniView cont_lift;
    cont_lift.emplace(0, std::move(cont));
    return pp * from_view(cont_lift, n);
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    check_vars(f, g);
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    LaurentPoly::Exp sf = f.min_exponents(), sg = g.min_exponents();
    for (auto& x : sf) x = -x;
    for (auto& x : sg) x = -x;
    return poly_gcd(f.translated(sf), g.translated(sg)).normalized();
}

mpz_class laurent_width(const LaurentPoly& delta, const std::vector<mpz_class>& psi) {
    if (delta.is_zero()) return 0;
    if (psi.size() != delta.nvars())
        throw ConfigError("class length does not match the variable count");
    bool first = true;
    mpz_class lo(0), hi(0);
    for (const auto& [e, c] : delta.terms()) {
        mpz_class v(0);
        for (size_t i = 0; i < psi.size(); ++i) v += psi[i] * e[i];
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    }
    return hi - lo;
}

}  // namespace tnlb
