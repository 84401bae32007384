#include "tnlb/skew_field.hpp"

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

mpz_class int_matrix_det(const std::vector<std::vector<long>>& m) {
    const size_t k = m.size();
    IntMat a(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) a.at(i, j) = m[i][j];
    return mat_det(a);
}

std::vector<std::vector<long>> int_matrix_inverse(const std::vector<std::vector<long>>& m) {
    const size_t k = m.size();
    IntMat a(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) a.at(i, j) = m[i][j];
    IntMat inv = unimodular_inverse(a);
    std::vector<std::vector<long>> out(k, std::vector<long>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (!inv.at(i, j).fits_slong_p())
                throw InternalError("automorphism inverse entry overflow");
            out[i][j] = inv.at(i, j).get_si();
        }
    return out;
}

Cyclotomic cyc_pow(const Cyclotomic& c, long e) {
    Cyclotomic base = e < 0 ? c.inverse() : c;
    long n = e < 0 ? -e : e;
    Cyclotomic r(mpq_class(1));
    for (long i = 0; i < n; ++i) r *= base;
    return r;
}

}  // namespace

MonomialAutomorphism::MonomialAutomorphism(size_t k) : k_(k) {
    mat_.assign(k, std::vector<long>(k, 0));
    for (size_t i = 0; i < k; ++i) mat_[i][i] = 1;
    sc_.assign(k, Cyclotomic(mpq_class(1)));
    inv_mat_ = mat_;
    inv_sc_ = sc_;
}

MonomialAutomorphism::MonomialAutomorphism(std::vector<std::vector<long>> matrix,
                                           std::vector<Cyclotomic> scalars)
    : k_(matrix.size()), mat_(std::move(matrix)), sc_(std::move(scalars)) {
    if (sc_.size() != k_) throw ConfigError("automorphism needs one scalar per variable");
    for (const auto& row : mat_)
        if (row.size() != k_) throw ConfigError("automorphism matrix must be square");
    for (const auto& c : sc_)
        if (c.is_zero()) throw ConfigError("automorphism scalars must be nonzero");
    if (k_ > 0) {
        mpz_class det = int_matrix_det(mat_);
        if (det != 1 && det != -1)
            throw ConfigError(
                "automorphism matrix must be invertible over the integers (|det| = 1)");
        inv_mat_ = int_matrix_inverse(mat_);
        // alpha^{-1}(u_i) = (prod_j scalars[j]^{N[i][j]})^{-1} u^{N row i}, N = M^{-1}
        inv_sc_.clear();
        for (size_t i = 0; i < k_; ++i) {
            Cyclotomic s(mpq_class(1));
            for (size_t j = 0; j < k_; ++j) s *= cyc_pow(sc_[j], inv_mat_[i][j]);
            inv_sc_.push_back(s.inverse());
        }
    }
}

bool MonomialAutomorphism::is_identity() const {
    for (size_t i = 0; i < k_; ++i) {
        if (!sc_[i].is_one()) return false;
        for (size_t j = 0; j < k_; ++j)
            if (mat_[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

MonomialAutomorphism MonomialAutomorphism::inverse() const {
    return MonomialAutomorphism(inv_mat_, inv_sc_, mat_, sc_);
}

MonomialAutomorphism::MonomialAutomorphism(std::vector<std::vector<long>> m,
                                           std::vector<Cyclotomic> s,
                                           std::vector<std::vector<long>> im,
                                           std::vector<Cyclotomic> is)
    : k_(m.size()),
      mat_(std::move(m)),
      sc_(std::move(s)),
      inv_mat_(std::move(im)),
      inv_sc_(std::move(is)) {}

LaurentPoly MonomialAutomorphism::apply_with(const std::vector<std::vector<long>>& m,
                                             const std::vector<Cyclotomic>& s,
                                             const LaurentPoly& p) const {
    if (p.nvars() != k_) throw InternalError("automorphism: variable count mismatch");
    LaurentPoly out(k_);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly::Exp ne(k_, 0);
        Cyclotomic coeff = c;
        for (size_t i = 0; i < k_; ++i) {
            if (e[i] == 0) continue;
            for (size_t j = 0; j < k_; ++j) ne[j] += e[i] * m[i][j];
            coeff *= cyc_pow(s[i], e[i]);
        }
        out.add_term(ne, coeff);
    }
    return out;
}

LaurentPoly MonomialAutomorphism::apply(const LaurentPoly& p) const {
    return apply_with(mat_, sc_, p);
}

LaurentPoly MonomialAutomorphism::apply_power(const LaurentPoly& p, long j) const {
    if (j == 0 || k_ == 0) return p;
    LaurentPoly r = p;
    if (j > 0)
        for (long i = 0; i < j; ++i) r = apply_with(mat_, sc_, r);
    else
        for (long i = 0; i < -j; ++i) r = apply_with(inv_mat_, inv_sc_, r);
    return r;
}

// ---------------------------------------------------------------------------
// rational functions
// ---------------------------------------------------------------------------

SkewFieldElt::SkewFieldElt(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ConfigError("rational function with zero denominator");
    if (num_.nvars() != den_.nvars())
        throw InternalError("rational function: variable count mismatch");
    reduce();
}

SkewFieldElt SkewFieldElt::of(const LaurentPoly& p) {
    return SkewFieldElt(p, LaurentPoly::constant(p.nvars(), Cyclotomic(1)));
}

SkewFieldElt SkewFieldElt::constant(size_t vars, const Cyclotomic& c) {
    return of(LaurentPoly::constant(vars, c));
}

SkewFieldElt SkewFieldElt::variable(size_t vars, size_t index, long power) {
    LaurentPoly::Exp e(vars, 0);
    e.at(index) = power;
    return of(LaurentPoly::monomial(vars, e, Cyclotomic(1)));
}

void SkewFieldElt::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(den_.nvars(), Cyclotomic(1));
        return;
    }
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_constant()) {
        auto qn = exact_divide(num_, g);
        auto qd = exact_divide(den_, g);
        if (!qn || !qd) throw InternalError("rational function: gcd does not divide");
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    // normalize the denominator to the canonical associate and apply the
    // same unit to the numerator
    LaurentPoly target = den_.normalized();
    auto unit = exact_divide(target, den_);
    if (!unit) throw InternalError("rational function: unit normalization failed");
    num_ = num_ * *unit;
    den_ = std::move(target);
}

bool SkewFieldElt::is_one() const {
    return den_.is_constant() && num_ == den_;
}

SkewFieldElt SkewFieldElt::operator-() const {
    SkewFieldElt r = *this;
    r.num_ = -r.num_;
    return r;
}

SkewFieldElt& SkewFieldElt::operator+=(const SkewFieldElt& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

SkewFieldElt& SkewFieldElt::operator-=(const SkewFieldElt& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

SkewFieldElt& SkewFieldElt::operator*=(const SkewFieldElt& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

SkewFieldElt& SkewFieldElt::operator/=(const SkewFieldElt& o) {
    if (o.is_zero()) throw ConfigError("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

SkewFieldElt SkewFieldElt::inverse() const {
    if (is_zero()) throw ConfigError("inverse of zero rational function");
    return SkewFieldElt(den_, num_);
}

bool operator==(const SkewFieldElt& a, const SkewFieldElt& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

SkewFieldElt SkewFieldElt::transformed(const MonomialAutomorphism& alpha, long power) const {
    if (power == 0 || alpha.vars() == 0) return *this;
    return SkewFieldElt(alpha.apply_power(num_, power), alpha.apply_power(den_, power));
}

std::string SkewFieldElt::str(const std::vector<std::string>& var_names) const {
    if (den_.is_constant() && den_ == LaurentPoly::constant(den_.nvars(), Cyclotomic(1)))
        return num_.str(var_names);
    std::string n = num_.str(var_names);
    std::string d = den_.str(var_names);
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace tnlb
