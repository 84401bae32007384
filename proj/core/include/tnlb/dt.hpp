#pragma once

#include <vector>

#include "tnlb/presentation.hpp"

namespace tnlb {

/// Group presentation of a knot exterior from a Dowker-Thistlethwaite code
/// (one even integer per crossing, signs recording over/under at the odd
/// visit). One generator per arc, one relator per crossing with one
/// redundant relator dropped, so the deficiency is 1.
///
/// Throws ConfigError for malformed codes (odd entries, out-of-range or
/// repeated labels, pairings with no planar realization).
GroupPresentation wirtinger_from_dt(const std::vector<long>& dt_code);

}  // namespace tnlb
