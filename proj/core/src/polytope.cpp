#include "tnlb/polytope.hpp"

#include <algorithm>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

// Phase-1 simplex with Bland's rule over exact rationals. Decides whether
//   sum_j lambda_j p_j = v,  sum_j lambda_j = 1,  lambda >= 0
// is feasible. Small and dense; inputs here are tiny.
bool barycentric_feasible(const std::vector<std::vector<long>>& pts,
                          const std::vector<long>& v) {
    if (pts.empty()) return false;
    const size_t d = v.size();
    const size_t rows = d + 1;
    const size_t n = pts.size();

    // tableau columns: n lambdas, then `rows` artificials, then rhs
    const size_t cols = n + rows + 1;
    std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols, mpq_class(0)));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = pts[j][i];
        t[i][cols - 1] = v[i];
    }
    for (size_t j = 0; j < n; ++j) t[rows - 1][j] = 1;
    t[rows - 1][cols - 1] = 1;
    // make rhs nonnegative, add artificial basis
    std::vector<size_t> basis(rows);
    for (size_t i = 0; i < rows; ++i) {
        if (t[i][cols - 1] < 0)
            for (auto& x : t[i]) x = -x;
        t[i][n + i] = 1;
        basis[i] = n + i;
    }
    // objective: minimize sum of artificials == maximize -(sum); reduced row
    std::vector<mpq_class> z(cols, mpq_class(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) z[j] += t[i][j];
    for (size_t i = 0; i < rows; ++i) z[n + i] = 0;

    for (;;) {
        // Bland: entering column = lowest index with positive reduced cost
        size_t enter = cols - 1;
        for (size_t j = 0; j + 1 < cols; ++j)
            if (z[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols - 1) break;
        // ratio test, Bland ties by lowest basis variable index
        size_t leave = rows;
        mpq_class best;
        for (size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            mpq_class ratio = t[i][cols - 1] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows) throw InternalError("polytope: unbounded phase-1 program");
        mpq_class piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            mpq_class f = t[i][enter];
            for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        mpq_class fz = z[enter];
        if (fz != 0)
            for (size_t j = 0; j < cols; ++j) z[j] -= fz * t[leave][j];
        basis[leave] = enter;
    }
    return z[cols - 1] == 0;  // all artificials driven to zero
}

}  // namespace

bool in_convex_hull(const std::vector<long>& point,
                    const std::vector<std::vector<long>>& points) {
    return barycentric_feasible(points, point);
}

NewtonPolytope newton_polytope(const LaurentPoly& delta) {
    if (delta.is_zero())
        throw ConfigError("the zero polynomial has no Newton polytope");
    std::vector<std::vector<long>> support;
    for (const auto& [e, c] : delta.terms()) support.push_back(e);

    NewtonPolytope np;
    np.dim = delta.nvars();
    for (size_t i = 0; i < support.size(); ++i) {
        std::vector<std::vector<long>> others;
        for (size_t j = 0; j < support.size(); ++j)
            if (j != i) others.push_back(support[j]);
        if (others.empty() || !in_convex_hull(support[i], others))
            np.vertices.push_back(support[i]);
    }
    std::sort(np.vertices.begin(), np.vertices.end());
    return np;
}

mpz_class polytope_width(const NewtonPolytope& np, const std::vector<mpz_class>& psi) {
    if (np.vertices.empty()) return 0;
    if (psi.size() != np.dim) throw ConfigError("class length does not match dimension");
    bool first = true;
    mpz_class lo(0), hi(0);
    for (const auto& v : np.vertices) {
        mpz_class s(0);
        for (size_t i = 0; i < psi.size(); ++i) s += psi[i] * v[i];
        if (first) {
            lo = hi = s;
            first = false;
        } else {
            if (s < lo) lo = s;
            if (s > hi) hi = s;
        }
    }
    return hi - lo;
}

}  // namespace tnlb
