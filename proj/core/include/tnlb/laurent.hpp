#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tnlb/cyclotomic.hpp"

namespace tnlb {

/// Multivariate Laurent polynomial over Q(zeta_n), stored as a sorted map
/// from exponent vectors (lexicographic order) to nonzero coefficients.
/// The variable count is fixed per value; zero variables means a constant.
class LaurentPoly {
  public:
    using Exp = std::vector<long>;
    using TermMap = std::map<Exp, Cyclotomic>;

    explicit LaurentPoly(size_t nvars = 0) : nvars_(nvars) {}
    static LaurentPoly constant(size_t nvars, const Cyclotomic& c);
    static LaurentPoly monomial(size_t nvars, Exp e, const Cyclotomic& c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void set(const Exp& e, const Cyclotomic& c);  // overwrite; drops zeros
    void add_term(const Exp& e, const Cyclotomic& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scaled(const Cyclotomic& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Componentwise minimum of the support; zero vector for the zero poly.
    Exp min_exponents() const;
    Exp max_exponents() const;
    LaurentPoly translated(const Exp& shift) const;

    /// Canonical unit normalization: support shifted so per-variable minima
    /// are 0; over Q scaled to coprime integer coefficients with positive
    /// lexicographically-first coefficient, otherwise scaled so the first
    /// coefficient is exactly 1.
    LaurentPoly normalized() const;
    bool is_associate(const LaurentPoly& o) const;

    /// All coefficients lie in Q.
    bool rational_coeffs() const;

    std::string str(const std::vector<std::string>& var_names) const;

  private:
    size_t nvars_;
    TermMap terms_;
};

/// Quotient when g divides f exactly in the Laurent ring; nullopt otherwise.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Gcd in the unique factorization domain Q(zeta)[x1^{+-1}..], canonical up
/// to the unit normalization above (which is applied). gcd(f, 0) = f.
LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g);

/// Width of the support in direction psi: max |<psi, e> - <psi, e'>| over
/// support pairs; 0 for the zero polynomial.
mpz_class laurent_width(const LaurentPoly& delta, const std::vector<mpz_class>& psi);

/// Names t / t1..tk used for rendering classes on the free quotient.
std::vector<std::string> default_var_names(size_t nvars, const std::string& stem = "t");

}  // namespace tnlb
