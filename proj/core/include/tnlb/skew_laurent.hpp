#pragma once

#include <map>
#include <string>

#include "tnlb/skew_field.hpp"

namespace tnlb {

/// Skew Laurent polynomial: a finite sum of monomials t^e * a with
/// coefficients written on the right, multiplying by
/// (t^i a)(t^j b) = t^{i+j} alpha^j(a) b. Addition is coefficient-wise, so
/// values are plain data; products and divisions go through SkewRing,
/// which carries the automorphism.
class SkewLaurentPoly {
  public:
    using TermMap = std::map<long, SkewFieldElt>;

    explicit SkewLaurentPoly(size_t vars = 0) : vars_(vars) {}
    static SkewLaurentPoly coeff(const SkewFieldElt& a, long t_exp = 0);
    static SkewLaurentPoly one(size_t vars);

    size_t vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const { return terms_.size() == 1; }
    const TermMap& terms() const { return terms_; }

    long min_deg() const;  // requires nonzero
    long max_deg() const;  // requires nonzero
    long span() const { return is_zero() ? 0 : max_deg() - min_deg(); }

    const SkewFieldElt* coeff_at(long e) const;
    void add_term(long e, const SkewFieldElt& c);

    SkewLaurentPoly operator-() const;
    SkewLaurentPoly& operator+=(const SkewLaurentPoly& o);
    SkewLaurentPoly& operator-=(const SkewLaurentPoly& o);
    friend SkewLaurentPoly operator+(SkewLaurentPoly a, const SkewLaurentPoly& b) {
        return a += b;
    }
    friend SkewLaurentPoly operator-(SkewLaurentPoly a, const SkewLaurentPoly& b) {
        return a -= b;
    }
    friend bool operator==(const SkewLaurentPoly& a, const SkewLaurentPoly& b);
    friend bool operator!=(const SkewLaurentPoly& a, const SkewLaurentPoly& b) {
        return !(a == b);
    }

    /// Exponents shifted by k (left multiplication by the unit t^k).
    SkewLaurentPoly shifted(long k) const;

    std::string str(const std::vector<std::string>& u_names) const;

  private:
    size_t vars_;
    TermMap terms_;
};

struct SkewDivision {
    SkewLaurentPoly quotient, remainder;
};

/// The ring Lambda = K[t^{+-1}; alpha] for K = Q(zeta_n)(u_1..u_k).
class SkewRing {
  public:
    SkewRing(size_t vars, MonomialAutomorphism alpha, unsigned cyc_order = 1);
    static SkewRing commutative(size_t vars = 0, unsigned cyc_order = 1);

    size_t vars() const { return vars_; }
    unsigned cyc_order() const { return cyc_order_; }
    const MonomialAutomorphism& alpha() const { return alpha_; }

    SkewLaurentPoly t(long e = 1) const;
    SkewLaurentPoly one() const { return SkewLaurentPoly::one(vars_); }
    SkewLaurentPoly monomial(long t_exp, const SkewFieldElt& a) const;

    SkewLaurentPoly mul(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const;
    /// f * c (right multiplication by a coefficient).
    SkewLaurentPoly scale_right(const SkewLaurentPoly& f, const SkewFieldElt& c) const;
    /// c * f (left multiplication; coefficients twist through the t-powers).
    SkewLaurentPoly scale_left(const SkewFieldElt& c, const SkewLaurentPoly& f) const;
    /// f * t^k: exponents shift and coefficients twist by alpha^k.
    SkewLaurentPoly shift_right(const SkewLaurentPoly& f, long k) const;

    /// Inverse of a one-term element t^m a.
    SkewLaurentPoly unit_inverse(const SkewLaurentPoly& f) const;

    /// Division on the unit-normalized representatives: writing
    /// ft = t^{-min f} f and gt likewise, returns q, r with ft = gt q + r
    /// and deg r < deg gt (or r = 0).
    SkewDivision right_divide(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const;
    /// Same with ft = q gt + r.
    SkewDivision left_divide(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const;

    /// x, y with b x = c y != 0 (right Ore condition, via the extended
    /// Euclidean algorithm on right ideals).
    std::pair<SkewLaurentPoly, SkewLaurentPoly> common_right_multiple(
        const SkewLaurentPoly& b, const SkewLaurentPoly& c) const;

    /// Greatest common right divisor: d with f = q_f d, g = q_g d.
    SkewLaurentPoly gcrd(const SkewLaurentPoly& f, const SkewLaurentPoly& g) const;

    /// q with f = q g; throws InternalError when g does not right-divide f.
    SkewLaurentPoly exact_left_quotient(const SkewLaurentPoly& f,
                                        const SkewLaurentPoly& g) const;

  private:
    size_t vars_;
    MonomialAutomorphism alpha_;
    unsigned cyc_order_;

    // division on polynomial representatives (no negative exponents)
    SkewDivision divide_poly(const SkewLaurentPoly& f, const SkewLaurentPoly& g,
                             bool right) const;
};

}  // namespace tnlb
