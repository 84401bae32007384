#pragma once

#include <gmpxx.h>

#include <vector>

#include "tnlb/laurent.hpp"

namespace tnlb {

/// Vertex set of the convex hull of a polynomial support, in Z^d.
struct NewtonPolytope {
    size_t dim = 0;
    std::vector<std::vector<long>> vertices;  // sorted lexicographically
};

/// Extreme points of conv(support(delta)); throws on the zero polynomial.
NewtonPolytope newton_polytope(const LaurentPoly& delta);

/// Width max |<psi, v> - <psi, v'>| over vertex pairs.
mpz_class polytope_width(const NewtonPolytope& np, const std::vector<mpz_class>& psi);

/// True when `point` lies in the convex hull of `points` (exact arithmetic).
bool in_convex_hull(const std::vector<long>& point,
                    const std::vector<std::vector<long>>& points);

}  // namespace tnlb
