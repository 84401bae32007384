#include "tnlb/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace tnlb {

namespace {

// Exact division of integer polynomials, ascending coefficients. The
// divisor must be monic and divide exactly.
std::vector<mpz_class> exact_div_monic(std::vector<mpz_class> num,
                                       const std::vector<mpz_class>& den) {
    const size_t dd = den.size() - 1;
    if (num.size() - 1 < dd) throw InternalError("cyclotomic: bad division");
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    for (size_t k = quot.size(); k-- > 0;) {
        mpz_class c = num[k + dd];
        quot[k] = c;
        if (c != 0)
            for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (const auto& r : num)
        if (r != 0) throw InternalError("cyclotomic: inexact division");
    return quot;
}

size_t poly_degree(const std::vector<mpq_class>& p) {
    size_t d = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) d = i;
    return d;
}

bool poly_is_zero(const std::vector<mpq_class>& p) {
    return std::all_of(p.begin(), p.end(), [](const mpq_class& c) { return c == 0; });
}

// Remainder of a(z) modulo the monic integer polynomial m(z), over Q.
void mod_monic(std::vector<mpq_class>& a, const std::vector<mpz_class>& m) {
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        mpq_class lead = a.back();
        size_t k = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i <= dm; ++i) a[k + i] -= lead * mpq_class(m[i]);
        a.pop_back();
    }
    a.resize(dm, mpq_class(0));
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (n == 0) throw Error("cyclotomic order must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // inside the same lock.
    std::function<const std::vector<mpz_class>&(unsigned)> get =
        [&](unsigned k) -> const std::vector<mpz_class>& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<mpz_class> num(k + 1, mpz_class(0));
        num[0] = -1;
        num[k] = 1;
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) num = exact_div_monic(std::move(num), get(d));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(n);
}

Cyclotomic::Cyclotomic(const mpq_class& r, unsigned order) : n_(order) {
    if (order == 0) throw Error("cyclotomic order must be positive");
    c_.assign(cyclotomic_polynomial(order).size() - 1, mpq_class(0));
    c_[0] = r;
}

Cyclotomic Cyclotomic::root_power(unsigned order, long k) {
    if (order == 0) throw Error("cyclotomic order must be positive");
    long e = k % static_cast<long>(order);
    if (e < 0) e += order;
    Cyclotomic z(mpq_class(0), order);
    std::vector<mpq_class> raw(static_cast<size_t>(e) + 1, mpq_class(0));
    raw[static_cast<size_t>(e)] = 1;
    z.reduce(raw);
    return z;
}

void Cyclotomic::reduce(std::vector<mpq_class>& raw) {
    mod_monic(raw, cyclotomic_polynomial(n_));
    c_ = std::move(raw);
}

bool Cyclotomic::is_zero() const { return poly_is_zero(c_); }

bool Cyclotomic::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::to_order(unsigned order) const {
    if (order == n_) return *this;
    if (!is_rational())
        throw Error("cannot mix cyclotomic values of orders " + std::to_string(n_) +
                    " and " + std::to_string(order));
    return Cyclotomic(c_[0], order);
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.n_ == b.n_) return;
    if (a.is_rational())
        a = a.to_order(b.n_);
    else
        b = b.to_order(a.n_);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    std::vector<mpq_class> prod(c_.size() + rhs.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j)
            if (rhs.c_[j] != 0) prod[i + j] += c_[i] * rhs.c_[j];
    }
    reduce(prod);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(zeta)");
    if (is_rational()) {
        Cyclotomic r(mpq_class(1) / c_[0], n_);
        return r;
    }
    // Extended Euclid in Q[z] against Phi_n: s*a + t*Phi = 1.
    const auto& phi_z = cyclotomic_polynomial(n_);
    std::vector<mpq_class> r0(phi_z.begin(), phi_z.end());
    std::vector<mpq_class> r1 = c_;
    r1.resize(poly_degree(r1) + 1);
    std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
    while (!poly_is_zero(r1)) {
        size_t d0 = poly_degree(r0), d1 = poly_degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // one division step: r0 -= q * r1, s0 -= q * s1
        std::vector<mpq_class> q(d0 - d1 + 1, mpq_class(0));
        std::vector<mpq_class> rem = r0;
        for (size_t k = d0 - d1 + 1; k-- > 0;) {
            if (poly_degree(rem) != k + d1 || rem[k + d1] == 0) continue;
            mpq_class f = rem[k + d1] / r1[d1];
            q[k] = f;
            for (size_t i = 0; i <= d1; ++i) rem[k + i] -= f * r1[i];
        }
        std::vector<mpq_class> s2 = s0;
        s2.resize(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        r1.resize(std::max<size_t>(poly_degree(r1) + 1, 1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the (degree-0) gcd since Phi_n is irreducible over Q.
    if (poly_degree(r0) != 0 || r0[0] == 0)
        throw InternalError("cyclotomic inverse: gcd not constant");
    Cyclotomic out(mpq_class(0), n_);
    std::vector<mpq_class> raw = s0;
    for (auto& x : raw) x /= r0[0];
    out.reduce(raw);
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    if (x.n_ != y.n_) {
        if (x.is_rational() && y.is_rational()) return x.c_[0] == y.c_[0];
        if (x.is_rational())
            x = x.to_order(y.n_);
        else if (y.is_rational())
            y = y.to_order(x.n_);
        else
            return false;
    }
    return x.c_ == y.c_;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class v = c_[i];
        if (first) {
            if (v < 0) {
                out << "-";
                v = -v;
            }
        } else {
            out << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        bool need_coeff = (i == 0) || v != 1;
        if (need_coeff) out << v.get_str();
        if (i > 0) {
            if (need_coeff) out << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text, unsigned order) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("bad coefficient '" + text + "': " + why);
    };

    Cyclotomic acc(mpq_class(0), order);
    skip_ws();
    if (pos == text.size()) fail("empty");
    bool expect_term = true;
    int sign = 1;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        char ch = text[pos];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') sign = -sign;
            else if (expect_term && ch == '+') { /* unary plus */ }
            else {
                sign = (ch == '-') ? -1 : 1;
                expect_term = true;
            }
            ++pos;
            continue;
        }
        if (!expect_term) fail("missing operator");
        // term: [rational][*][z[^k]]
        mpq_class coeff(1);
        bool have_num = false;
        size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos > start) {
            coeff = mpq_class(text.substr(start, pos - start));
            coeff.canonicalize();
            have_num = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        long zexp = 0;
        if (pos < text.size() && text[pos] == 'z') {
            ++pos;
            zexp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                size_t es = pos;
                if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == es) fail("missing exponent");
                zexp = std::stol(text.substr(es, pos - es));
            }
        } else if (!have_num) {
            fail("expected number or z");
        }
        Cyclotomic term = root_power(order, zexp);
        term *= Cyclotomic(sign < 0 ? -coeff : coeff, order);
        acc += term;
        sign = 1;
        expect_term = false;
    }
    if (expect_term) fail("dangling operator");
    return acc;
}

}  // namespace tnlb
