#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tnlb/errors.hpp"

namespace tnlb {

/// Coefficients of the n-th cyclotomic polynomial, ascending degree,
/// monic over Z. Cached; safe to call concurrently.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

/// Element of the field Q(zeta_n), stored as a polynomial in zeta_n of
/// degree < deg Phi_n with rational coefficients. Order 1 is plain Q.
/// Mixed-order arithmetic is allowed only when one operand is rational
/// (it is promoted); anything else throws.
class Cyclotomic {
  public:
    Cyclotomic() : n_(1), c_(1, mpq_class(0)) {}
    Cyclotomic(const mpq_class& r, unsigned order = 1);
    Cyclotomic(long v) : Cyclotomic(mpq_class(v)) {}

    /// zeta_n^k (k may be negative).
    static Cyclotomic root_power(unsigned order, long k);

    unsigned order() const { return n_; }
    bool is_zero() const;
    bool is_one() const;

    /// True when the value lies in Q (all non-constant coordinates vanish).
    bool is_rational() const;
    mpq_class rational_value() const;

    /// Same value viewed in Q(zeta_order); requires the value to be
    /// rational unless the orders already agree.
    Cyclotomic to_order(unsigned order) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    Cyclotomic inverse() const;
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    const std::vector<mpq_class>& coords() const { return c_; }

    /// Rendered as "a0 + a1*z + ..." with rational coefficients; "0" when zero.
    std::string str() const;

    /// Inverse of str(); also accepts bare rationals for any order.
    static Cyclotomic parse(const std::string& text, unsigned order);

  private:
    unsigned n_;
    std::vector<mpq_class> c_;  // size = deg Phi_n, reduced mod Phi_n

    void reduce(std::vector<mpq_class>& raw);
    static void align(Cyclotomic& a, Cyclotomic& b);
};

}  // namespace tnlb
