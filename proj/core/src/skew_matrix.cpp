#include "tnlb/skew_matrix.hpp"

#include <algorithm>

#include "tnlb/errors.hpp"

namespace tnlb {

SkewMat SkewMat::identity(size_t n, size_t vars) {
    SkewMat m(n, n, vars);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = SkewLaurentPoly::one(vars);
    return m;
}

bool SkewMat::is_identity() const {
    if (rows != cols) return false;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            const SkewLaurentPoly& x = at(i, j);
            if (i == j) {
                if (x.terms().size() != 1 || x.coeff_at(0) == nullptr ||
                    !x.coeff_at(0)->is_one())
                    return false;
            } else if (!x.is_zero()) {
                return false;
            }
        }
    return true;
}

SkewMat mat_mul(const SkewRing& ring, const SkewMat& a, const SkewMat& b) {
    if (a.cols != b.rows) throw InternalError("skew mat_mul: shape mismatch");
    SkewMat r(a.rows, b.cols, ring.vars());
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            const SkewLaurentPoly& f = a.at(i, k);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += ring.mul(f, b.at(k, j));
            }
        }
    return r;
}

namespace {

// Elementary-operation bookkeeping for U A V = D with certified inverses.
struct Reducer {
    const SkewRing& ring;
    SkewMat w, u, u_inv, v, v_inv;

    Reducer(const SkewRing& r, const SkewMat& a)
        : ring(r),
          w(a),
          u(SkewMat::identity(a.rows, r.vars())),
          u_inv(SkewMat::identity(a.rows, r.vars())),
          v(SkewMat::identity(a.cols, r.vars())),
          v_inv(SkewMat::identity(a.cols, r.vars())) {}

    void row_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < w.cols; ++c) std::swap(w.at(i, c), w.at(j, c));
        for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (size_t r = 0; r < u_inv.rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
    }
    void col_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < w.rows; ++r) std::swap(w.at(r, i), w.at(r, j));
        for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        for (size_t c = 0; c < v_inv.cols; ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
    }
    /// row_i <- unit * row_i
    void row_unit(size_t i, const SkewLaurentPoly& unit) {
        SkewLaurentPoly inv = ring.unit_inverse(unit);
        for (size_t c = 0; c < w.cols; ++c) w.at(i, c) = ring.mul(unit, w.at(i, c));
        for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = ring.mul(unit, u.at(i, c));
        for (size_t r = 0; r < u_inv.rows; ++r)
            u_inv.at(r, i) = ring.mul(u_inv.at(r, i), inv);
    }
    /// col_j <- col_j * unit
    void col_unit(size_t j, const SkewLaurentPoly& unit) {
        SkewLaurentPoly inv = ring.unit_inverse(unit);
        for (size_t r = 0; r < w.rows; ++r) w.at(r, j) = ring.mul(w.at(r, j), unit);
        for (size_t r = 0; r < v.rows; ++r) v.at(r, j) = ring.mul(v.at(r, j), unit);
        for (size_t c = 0; c < v_inv.cols; ++c)
            v_inv.at(j, c) = ring.mul(inv, v_inv.at(j, c));
    }
    /// row_i <- row_i - q * row_t
    void row_sub(size_t i, size_t t, const SkewLaurentPoly& q) {
        if (q.is_zero()) return;
        for (size_t c = 0; c < w.cols; ++c) w.at(i, c) -= ring.mul(q, w.at(t, c));
        for (size_t c = 0; c < u.cols; ++c) u.at(i, c) -= ring.mul(q, u.at(t, c));
        for (size_t r = 0; r < u_inv.rows; ++r)
            u_inv.at(r, t) += ring.mul(u_inv.at(r, i), q);
    }
    /// col_j <- col_j - col_t * q
    void col_sub(size_t j, size_t t, const SkewLaurentPoly& q) {
        if (q.is_zero()) return;
        for (size_t r = 0; r < w.rows; ++r) w.at(r, j) -= ring.mul(w.at(r, t), q);
        for (size_t r = 0; r < v.rows; ++r) v.at(r, j) -= ring.mul(v.at(r, t), q);
        for (size_t c = 0; c < v_inv.cols; ++c)
            v_inv.at(t, c) += ring.mul(q, v_inv.at(j, c));
    }

    bool find_pivot(size_t t, size_t& pi, size_t& pj) const {
        bool found = false;
        long best = 0;
        for (size_t i = t; i < w.rows; ++i)
            for (size_t j = t; j < w.cols; ++j) {
                if (w.at(i, j).is_zero()) continue;
                long s = w.at(i, j).span();
                if (!found || s < best) {
                    found = true;
                    best = s;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void normalize_entry_by_row(size_t i, size_t j) {
        const SkewLaurentPoly& x = w.at(i, j);
        if (x.is_zero()) return;
        long m = x.min_deg();
        if (m != 0) row_unit(i, ring.t(-m));
    }
    void normalize_entry_by_col(size_t i, size_t j) {
        const SkewLaurentPoly& x = w.at(i, j);
        if (x.is_zero()) return;
        long m = x.min_deg();
        if (m != 0) col_unit(j, ring.t(-m));
    }
};

}  // namespace

DiagonalForm diagonalize(const SkewRing& ring, const SkewMat& a) {
    Reducer rd(ring, a);
    const size_t limit = std::min(a.rows, a.cols);

    for (size_t t = 0; t < limit; ++t) {
        size_t pi, pj;
        if (!rd.find_pivot(t, pi, pj)) break;
        rd.row_swap(t, pi);
        rd.col_swap(t, pj);

        for (;;) {
            rd.normalize_entry_by_row(t, t);
            bool changed = false;
            for (size_t i = t + 1; i < rd.w.rows; ++i) {
                if (rd.w.at(i, t).is_zero()) continue;
                rd.normalize_entry_by_row(i, t);
                SkewDivision dv = ring.left_divide(rd.w.at(i, t), rd.w.at(t, t));
                rd.row_sub(i, t, dv.quotient);
                if (!rd.w.at(i, t).is_zero()) changed = true;
            }
            for (size_t j = t + 1; j < rd.w.cols; ++j) {
                if (rd.w.at(t, j).is_zero()) continue;
                rd.normalize_entry_by_col(t, j);
                SkewDivision dv = ring.right_divide(rd.w.at(t, j), rd.w.at(t, t));
                rd.col_sub(j, t, dv.quotient);
                if (!rd.w.at(t, j).is_zero()) changed = true;
            }
            if (!changed) break;
            size_t ni, nj;
            if (!rd.find_pivot(t, ni, nj)) break;
            rd.row_swap(t, ni);
            rd.col_swap(t, nj);
        }
    }

    DiagonalForm out;
    out.u = std::move(rd.u);
    out.u_inv = std::move(rd.u_inv);
    out.v = std::move(rd.v);
    out.v_inv = std::move(rd.v_inv);
    out.d = std::move(rd.w);
    for (size_t t = 0; t < limit; ++t)
        if (!out.d.at(t, t).is_zero()) out.diag.push_back(out.d.at(t, t));
    out.free_rank = a.cols - out.diag.size();
    return out;
}

size_t torsion_rank_over_k(const DiagonalForm& d) {
    size_t r = 0;
    for (const auto& p : d.diag) r += static_cast<size_t>(p.span());
    return r;
}

// ---------------------------------------------------------------------------
// Ore fractions and rank by elimination
// ---------------------------------------------------------------------------

namespace {

// Right fraction num * den^{-1} over the quotient field of the ring,
// reduced by the greatest common right divisor.
struct OreFrac {
    SkewLaurentPoly num, den;
};

OreFrac ore_make(const SkewRing& ring, SkewLaurentPoly n, SkewLaurentPoly d) {
    if (d.is_zero()) throw InternalError("ore fraction with zero denominator");
    if (n.is_zero()) return OreFrac{SkewLaurentPoly(ring.vars()), ring.one()};
    SkewLaurentPoly g = ring.gcrd(n, d);
    if (!g.is_unit() || g.min_deg() != 0 || !g.coeff_at(0)->is_one()) {
        n = ring.exact_left_quotient(n, g);
        d = ring.exact_left_quotient(d, g);
    }
    // canonical denominator: polynomial, lowest degree 0, leading coeff 1
    long m = d.min_deg();
    if (m != 0) {
        n = ring.shift_right(n, -m);
        d = ring.shift_right(d, -m);
    }
    const SkewFieldElt lead = *d.coeff_at(d.max_deg());
    if (!lead.is_one()) {
        SkewFieldElt c = lead.inverse();
        n = ring.scale_right(n, c);
        d = ring.scale_right(d, c);
    }
    return OreFrac{std::move(n), std::move(d)};
}

OreFrac ore_zero(const SkewRing& ring) {
    return OreFrac{SkewLaurentPoly(ring.vars()), ring.one()};
}

bool ore_is_zero(const OreFrac& f) { return f.num.is_zero(); }

OreFrac ore_add(const SkewRing& ring, const OreFrac& a, const OreFrac& b) {
    if (ore_is_zero(a)) return b;
    if (ore_is_zero(b)) return a;
    auto [x, y] = ring.common_right_multiple(a.den, b.den);
    SkewLaurentPoly m = ring.mul(a.den, x);
    SkewLaurentPoly n = ring.mul(a.num, x) + ring.mul(b.num, y);
    return ore_make(ring, std::move(n), std::move(m));
}

OreFrac ore_neg(const OreFrac& a) { return OreFrac{-a.num, a.den}; }

OreFrac ore_mul(const SkewRing& ring, const OreFrac& a, const OreFrac& b) {
    if (ore_is_zero(a) || ore_is_zero(b)) return ore_zero(ring);
    // a.den^{-1} * b.num = x * y^{-1} where a.den x = b.num y
    auto [x, y] = ring.common_right_multiple(a.den, b.num);
    return ore_make(ring, ring.mul(a.num, x), ring.mul(b.den, y));
}

OreFrac ore_inverse(const SkewRing& ring, const OreFrac& a) {
    if (ore_is_zero(a)) throw InternalError("inverse of zero ore fraction");
    return ore_make(ring, a.den, a.num);
}

}  // namespace

size_t ore_rank(const SkewRing& ring, const SkewMat& a) {
    std::vector<std::vector<OreFrac>> m(a.rows);
    for (size_t i = 0; i < a.rows; ++i) {
        m[i].reserve(a.cols);
        for (size_t j = 0; j < a.cols; ++j)
            m[i].push_back(ore_make(ring, a.at(i, j), ring.one()));
    }
    size_t rank = 0;
    for (size_t col = 0; col < a.cols && rank < a.rows; ++col) {
        size_t piv = rank;
        while (piv < a.rows && ore_is_zero(m[piv][col])) ++piv;
        if (piv == a.rows) continue;
        std::swap(m[rank], m[piv]);
        OreFrac inv = ore_inverse(ring, m[rank][col]);
        for (size_t i = rank + 1; i < a.rows; ++i) {
            if (ore_is_zero(m[i][col])) continue;
            OreFrac factor = ore_mul(ring, m[i][col], inv);
            for (size_t j = col; j < a.cols; ++j) {
                if (ore_is_zero(m[rank][j])) continue;
                m[i][j] = ore_add(ring, m[i][j],
                                  ore_neg(ore_mul(ring, factor, m[rank][j])));
            }
        }
        ++rank;
    }
    return rank;
}

bool harvey_estimate_check(const SkewRing& ring,
                           const std::vector<std::vector<SkewFieldElt>>& a,
                           const std::vector<std::vector<SkewFieldElt>>& b) {
    const size_t l = a.size();
    if (b.size() != l) throw ConfigError("harvey check: shape mismatch");
    const size_t m = l == 0 ? 0 : a.front().size();
    SkewMat mat(l, m, ring.vars());
    for (size_t i = 0; i < l; ++i) {
        if (a[i].size() != m || b[i].size() != m)
            throw ConfigError("harvey check: shape mismatch");
        for (size_t j = 0; j < m; ++j) {
            mat.at(i, j).add_term(0, a[i][j]);
            mat.at(i, j).add_term(1, b[i][j]);
        }
    }
    DiagonalForm d = diagonalize(ring, mat);
    return torsion_rank_over_k(d) <= std::min(l, m);
}

}  // namespace tnlb
