#pragma once

#include <gmpxx.h>

#include <vector>

namespace tnlb {

/// Dense integer matrix with exact entries.
struct IntMat {
    size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, mpz_class(0)) {}
    static IntMat identity(size_t n);

    mpz_class& at(size_t i, size_t j) { return a[i * cols + j]; }
    const mpz_class& at(size_t i, size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const IntMat&, const IntMat&) = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);

/// Determinant by fraction-free elimination (exact).
mpz_class mat_det(const IntMat& m);

/// Inverse of a matrix with determinant +-1.
IntMat unimodular_inverse(const IntMat& m);

struct SmithForm {
    IntMat u, d, v;  // u * input * v == d
};

/// Smith normal form: U A V = D with U, V unimodular and the diagonal of D
/// nonnegative with d_i | d_{i+1}. Pivot selection is deterministic:
/// smallest nonzero absolute value, ties broken by leftmost column then
/// topmost row.
SmithForm smith_normal_form(const IntMat& input);

}  // namespace tnlb
