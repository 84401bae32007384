#pragma once

#include <gmpxx.h>

#include <map>

#include "tnlb/abelianization.hpp"
#include "tnlb/laurent.hpp"
#include "tnlb/presentation.hpp"
#include "tnlb/word.hpp"

namespace tnlb {

/// Element of the integral group ring of a free group: a finite formal sum
/// of freely reduced words with integer coefficients.
class FreeGroupRingElt {
  public:
    using TermMap = std::map<Word, mpz_class>;

    FreeGroupRingElt() = default;
    static FreeGroupRingElt one() { return single(Word{}, 1); }
    static FreeGroupRingElt single(const Word& w, const mpz_class& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Word& w, const mpz_class& c);

    FreeGroupRingElt operator-() const;
    FreeGroupRingElt& operator+=(const FreeGroupRingElt& o);
    FreeGroupRingElt& operator-=(const FreeGroupRingElt& o);
    friend FreeGroupRingElt operator+(FreeGroupRingElt a, const FreeGroupRingElt& b) {
        return a += b;
    }
    friend FreeGroupRingElt operator-(FreeGroupRingElt a, const FreeGroupRingElt& b) {
        return a -= b;
    }
    friend FreeGroupRingElt operator*(const FreeGroupRingElt& a, const FreeGroupRingElt& b);

    friend bool operator==(const FreeGroupRingElt&, const FreeGroupRingElt&) = default;

  private:
    TermMap terms_;
};

/// Free derivative with respect to generator j, defined by
///   d(x_j)/dx_j = 1,  d(x_i)/dx_j = 0 (i != j),
///   d(x_j^{-1})/dx_j = -x_j^{-1},  d(uv)/dx_j = du/dx_j + u dv/dx_j.
FreeGroupRingElt fox_derivative(const Word& w, int j);

/// Jacobian of the relators: entry (i, j) = d r_i / d x_j.
struct AlexanderMatrix {
    size_t rows = 0, cols = 0;
    std::vector<FreeGroupRingElt> entries;  // row-major

    const FreeGroupRingElt& at(size_t i, size_t j) const { return entries[i * cols + j]; }
};

AlexanderMatrix alexander_matrix(const GroupPresentation& p);

/// Push a group-ring element through abelianization and a torsion
/// character: a word contributes sigma(torsion part) times the monomial of
/// its free part. The result lives over Q(zeta_order) in betti variables.
LaurentPoly push_abelian(const FreeGroupRingElt& e, const AbelianizationData& ab,
                         const Character& sigma);

}  // namespace tnlb
