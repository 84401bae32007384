#include "tnlb/alexander.hpp"

#include <cstdint>
#include <map>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

LaurentPoly det_rec(const LaurentMat& m, const std::vector<size_t>& rows,
                    const std::vector<size_t>& cols, size_t depth, uint64_t mask,
                    std::map<std::pair<size_t, uint64_t>, LaurentPoly>& memo,
                    size_t nvars) {
    if (depth == rows.size()) return LaurentPoly::constant(nvars, Cyclotomic(1));
    auto key = std::make_pair(depth, mask);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    LaurentPoly acc(nvars);
    int sign = 1;
    for (size_t c = 0; c < cols.size(); ++c) {
        if (mask & (uint64_t(1) << c)) continue;
        const LaurentPoly& e = m.at(rows[depth], cols[c]);
        if (!e.is_zero()) {
            LaurentPoly sub = det_rec(m, rows, cols, depth + 1, mask | (uint64_t(1) << c),
                                      memo, nvars);
            LaurentPoly term = e * sub;
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
}

LaurentPoly submatrix_det(const LaurentMat& m, const std::vector<size_t>& rows,
                          const std::vector<size_t>& cols, size_t nvars) {
    if (rows.size() != cols.size()) throw InternalError("laurent_det: not square");
    if (cols.size() > 64) throw InternalError("laurent_det: matrix too large");
    std::map<std::pair<size_t, uint64_t>, LaurentPoly> memo;
    return det_rec(m, rows, cols, 0, 0, memo, nvars);
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
    const size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

LaurentPoly laurent_det(const LaurentMat& m) {
    size_t nvars = m.entries.empty() ? 0 : m.entries.front().nvars();
    std::vector<size_t> rows(m.rows), cols(m.cols);
    for (size_t i = 0; i < m.rows; ++i) rows[i] = i;
    for (size_t j = 0; j < m.cols; ++j) cols[j] = j;
    return submatrix_det(m, rows, cols, nvars);
}

std::vector<LaurentPoly> elementary_ideal_gens(const LaurentMat& a, size_t m) {
    if (a.cols != m) throw InternalError("elementary_ideal_gens: column count mismatch");
    size_t nvars = a.entries.empty() ? 0 : a.entries.front().nvars();
    if (m == 0) throw InternalError("elementary_ideal_gens: no module generators");
    const size_t k = m - 1;
    if (k == 0) return {LaurentPoly::constant(nvars, Cyclotomic(1))};
    if (a.rows < k) return {LaurentPoly(nvars)};

    std::vector<LaurentPoly> gens;
    std::vector<size_t> rows(k);
    for (size_t i = 0; i < k; ++i) rows[i] = i;
    do {
        std::vector<size_t> cols(k);
        for (size_t i = 0; i < k; ++i) cols[i] = i;
        do {
            gens.push_back(submatrix_det(a, rows, cols, nvars));
        } while (next_combination(cols, m));
    } while (next_combination(rows, a.rows));
    return gens;
}

LaurentMat pushed_alexander_matrix(const GroupPresentation& p,
                                   const AbelianizationData& ab,
                                   const Character& sigma) {
    AlexanderMatrix fox = alexander_matrix(p);
    LaurentMat out(fox.rows, fox.cols, ab.betti);
    for (size_t i = 0; i < fox.rows; ++i)
        for (size_t j = 0; j < fox.cols; ++j)
            out.at(i, j) = push_abelian(fox.at(i, j), ab, sigma);
    return out;
}

LaurentPoly delta_sigma(const GroupPresentation& p, const AbelianizationData& ab,
                        const Character& sigma) {
    LaurentMat pushed = pushed_alexander_matrix(p, ab, sigma);
    std::vector<LaurentPoly> gens = elementary_ideal_gens(pushed, p.generator_count());
    LaurentPoly g(ab.betti);
    for (const auto& e : gens) {
        g = laurent_gcd(g, e);
        if (!g.is_zero() && g.is_constant()) break;  // already a unit
    }
    return g.normalized();
}

LaurentPoly delta_sigma(const GroupPresentation& p, const Character& sigma) {
    return delta_sigma(p, abelianize(p), sigma);
}

mpz_class alexander_fox_norm(const LaurentPoly& delta, const CohomologyClass& psi) {
    return laurent_width(delta, psi.coeffs);
}

}  // namespace tnlb
