#pragma once

#include <vector>

#include "tnlb/laurent.hpp"
#include "tnlb/snf.hpp"

namespace tnlb {

/// Field automorphism of Q(zeta_n)(u_1..u_k) acting by monomial
/// substitution u_i -> scalars[i] * u^{matrix row i}. The matrix must be
/// invertible over the integers (|det| = 1) so the map is an automorphism
/// with a computable inverse; construction rejects anything else.
class MonomialAutomorphism {
  public:
    /// Identity on k variables.
    explicit MonomialAutomorphism(size_t k = 0);
    MonomialAutomorphism(std::vector<std::vector<long>> matrix,
                         std::vector<Cyclotomic> scalars);

    size_t vars() const { return k_; }
    bool is_identity() const;
    const std::vector<std::vector<long>>& matrix() const { return mat_; }
    const std::vector<Cyclotomic>& scalars() const { return sc_; }

    MonomialAutomorphism inverse() const;

    /// Image of a Laurent polynomial in the u variables.
    LaurentPoly apply(const LaurentPoly& p) const;
    /// alpha^j applied to p, j any integer.
    LaurentPoly apply_power(const LaurentPoly& p, long j) const;

  private:
    size_t k_;
    std::vector<std::vector<long>> mat_;
    std::vector<Cyclotomic> sc_;
    std::vector<std::vector<long>> inv_mat_;
    std::vector<Cyclotomic> inv_sc_;

    MonomialAutomorphism(std::vector<std::vector<long>> m, std::vector<Cyclotomic> s,
                         std::vector<std::vector<long>> im, std::vector<Cyclotomic> is);
    LaurentPoly apply_with(const std::vector<std::vector<long>>& m,
                           const std::vector<Cyclotomic>& s, const LaurentPoly& p) const;
};

/// Element of the rational function field Q(zeta_n)(u_1..u_k), kept in
/// lowest terms with a canonically normalized denominator; the denominator
/// of zero is 1.
class SkewFieldElt {
  public:
    explicit SkewFieldElt(size_t vars = 0)
        : num_(vars), den_(LaurentPoly::constant(vars, Cyclotomic(1))) {}
    SkewFieldElt(LaurentPoly num, LaurentPoly den);
    static SkewFieldElt of(const LaurentPoly& p);
    static SkewFieldElt constant(size_t vars, const Cyclotomic& c);
    static SkewFieldElt variable(size_t vars, size_t index, long power = 1);

    size_t vars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    SkewFieldElt operator-() const;
    SkewFieldElt& operator+=(const SkewFieldElt& o);
    SkewFieldElt& operator-=(const SkewFieldElt& o);
    SkewFieldElt& operator*=(const SkewFieldElt& o);
    SkewFieldElt& operator/=(const SkewFieldElt& o);
    friend SkewFieldElt operator+(SkewFieldElt a, const SkewFieldElt& b) { return a += b; }
    friend SkewFieldElt operator-(SkewFieldElt a, const SkewFieldElt& b) { return a -= b; }
    friend SkewFieldElt operator*(SkewFieldElt a, const SkewFieldElt& b) { return a *= b; }
    friend SkewFieldElt operator/(SkewFieldElt a, const SkewFieldElt& b) { return a /= b; }
    SkewFieldElt inverse() const;

    friend bool operator==(const SkewFieldElt& a, const SkewFieldElt& b);
    friend bool operator!=(const SkewFieldElt& a, const SkewFieldElt& b) { return !(a == b); }

    SkewFieldElt transformed(const MonomialAutomorphism& alpha, long power) const;

    std::string str(const std::vector<std::string>& var_names) const;

  private:
    LaurentPoly num_, den_;
    void reduce();
};

}  // namespace tnlb
