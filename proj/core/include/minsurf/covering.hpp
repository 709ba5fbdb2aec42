#pragma once

#include <vector>

#include "minsurf/analysis.hpp"

namespace minsurf {

/// Unbranched covering description: total degree m, and for each puncture of
/// the base the partition of m into local degrees of its preimages.
struct CoverSpec {
    int m = 1;
    std::vector<std::vector<int>> fibers; // one partition per puncture

    void validate(int k) const; // throws input_error
};

struct CoverResult {
    int G_prime, k_prime, d_prime;
    Rational invR_prime;
    bool ratio_invariant; // invR' == invR, checked exactly
};

/// Push (G, k, d) through the covering: k' counts all parts, G' follows from
/// multiplicativity of the Euler characteristic, d' = m d. Rejects specs
/// whose G' fails to be a nonnegative integer.
CoverResult cover_pushforward(int G, int k, int d, const CoverSpec& spec);

/// Predicted analysis fragment of the lifted surface: same omitted and
/// totally ramified values, topology pushed through the cover.
struct LiftedInvariants {
    int Dg;
    Rational nu_g;
    Rational invR;
    Rational bound; // 2 + 2/R on the cover
    bool bounds_still_hold;
};
LiftedInvariants lift_invariants(const AnalysisReport& base, const CoverSpec& spec);

} // namespace minsurf
