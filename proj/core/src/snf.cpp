#include "tnlb/snf.hpp"

#include <algorithm>

#include "tnlb/errors.hpp"

namespace tnlb {

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw InternalError("mat_mul: shape mismatch");
    IntMat r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const mpz_class& f = x.at(i, k);
            if (f == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += f * y.at(k, j);
        }
    return r;
}

mpz_class mat_det(const IntMat& m) {
    if (m.rows != m.cols) throw InternalError("mat_det: square matrix required");
    size_t n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMat w = m;
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = q;
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

IntMat unimodular_inverse(const IntMat& m) {
    mpz_class det = mat_det(m);
    if (det != 1 && det != -1) throw InternalError("unimodular_inverse: |det| != 1");
    size_t n = m.rows;
    // adjugate / det via cofactors of the Bareiss-eliminated system would be
    // indirect; with |det| = 1 plain Gauss-Jordan over Q yields integers.
    std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(2 * n, mpq_class(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) w[i][j] = mpq_class(m.at(i, j));
        w[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && w[p][c] == 0) ++p;
        if (p == n) throw InternalError("unimodular_inverse: singular");
        std::swap(w[c], w[p]);
        mpq_class inv = 1 / w[c][c];
        for (auto& x : w[c]) x *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            mpq_class f = w[i][c];
            for (size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    IntMat out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            mpq_class v = w[i][n + j];
            if (v.get_den() != 1) throw InternalError("unimodular_inverse: non-integer entry");
            out.at(i, j) = v.get_num();
        }
    return out;
}

namespace {

struct Worker {
    IntMat d, u, v;

    void row_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void row_add(size_t dst, size_t src, const mpz_class& f) {
        if (f == 0) return;
        for (size_t c = 0; c < d.cols; ++c) d.at(dst, c) += f * d.at(src, c);
        for (size_t c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void col_add(size_t dst, size_t src, const mpz_class& f) {
        if (f == 0) return;
        for (size_t r = 0; r < d.rows; ++r) d.at(r, dst) += f * d.at(r, src);
        for (size_t r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void row_negate(size_t i) {
        for (size_t c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }

    bool find_pivot(size_t t, size_t& pi, size_t& pj) const {
        bool found = false;
        mpz_class best;
        for (size_t j = t; j < d.cols; ++j)
            for (size_t i = t; i < d.rows; ++i) {
                if (d.at(i, j) == 0) continue;
                mpz_class v_abs = abs(d.at(i, j));
                if (!found || v_abs < best) {
                    best = v_abs;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& input) {
    Worker w;
    w.d = input;
    w.u = IntMat::identity(input.rows);
    w.v = IntMat::identity(input.cols);

    size_t limit = std::min(input.rows, input.cols);
    for (size_t t = 0; t < limit; ++t) {
        size_t pi, pj;
        if (!w.find_pivot(t, pi, pj)) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < w.d.rows; ++i) {
                if (w.d.at(i, t) == 0) continue;
                mpz_class q = w.d.at(i, t) / w.d.at(t, t);  // truncated division
                w.row_add(i, t, -q);
                if (w.d.at(i, t) != 0) {
                    w.row_swap(t, i);  // remainder is smaller in absolute value
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < w.d.cols; ++j) {
                if (w.d.at(t, j) == 0) continue;
                mpz_class q = w.d.at(t, j) / w.d.at(t, t);
                w.col_add(j, t, -q);
                if (w.d.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block for the
            // divisibility chain; fold an offending row in and retry.
            bool divides_all = true;
            for (size_t i = t + 1; i < w.d.rows && divides_all; ++i)
                for (size_t j = t + 1; j < w.d.cols; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.row_add(t, i, mpz_class(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
    }
    return SmithForm{std::move(w.u), std::move(w.d), std::move(w.v)};
}

}  // namespace tnlb
