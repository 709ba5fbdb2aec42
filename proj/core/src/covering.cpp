#include "minsurf/covering.hpp"

#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

void CoverSpec::validate(int k) const {
    if (m < 1) throw input_error("covering degree must be >= 1");
    if (static_cast<int>(fibers.size()) != k) {
        std::ostringstream os;
        os << "cover spec has " << fibers.size() << " fiber partitions for " << k << " punctures";
        throw input_error(os.str());
    }
    for (const auto& part : fibers) {
        int sum = 0;
        for (int x : part) {
            if (x < 1) throw input_error("partition parts must be >= 1");
            sum += x;
        }
        if (sum != m) {
            std::ostringstream os;
            os << "each fiber partition must sum to m = " << m << ", got " << sum;
            throw input_error(os.str());
        }
    }
}

CoverResult cover_pushforward(int G, int k, int d, const CoverSpec& spec) {
    spec.validate(k);
    int k_prime = 0;
    for (const auto& part : spec.fibers) k_prime += static_cast<int>(part.size());
    // chi(M-hat) = m chi(M) for an unbranched cover of the open surface.
    const int chi = 2 - 2 * G - k;
    const int two_G_prime = 2 - k_prime - spec.m * chi;
    if (two_G_prime % 2 != 0 || two_G_prime < 0) {
        std::ostringstream os;
        os << "cover is not Euler-consistent: 2G' = " << two_G_prime;
        throw input_error(os.str());
    }
    CoverResult res;
    res.G_prime = two_G_prime / 2;
    res.k_prime = k_prime;
    res.d_prime = spec.m * d;
    res.invR_prime = ratio_inv_R(res.G_prime, res.k_prime, res.d_prime);
    res.ratio_invariant = (res.invR_prime == ratio_inv_R(G, k, d));
    return res;
}

LiftedInvariants lift_invariants(const AnalysisReport& base, const CoverSpec& spec) {
    const CoverResult cr = cover_pushforward(base.G, base.k, base.d, spec);
    LiftedInvariants li;
    // Omitted values and fiber multiplicities pull back unchanged through an
    // unbranched cover.
    li.Dg = base.Dg;
    li.nu_g = base.nu_g;
    li.invR = cr.invR_prime;
    li.bound = Rational(2) + 2 * cr.invR_prime;
    li.bounds_still_hold = Rational(li.Dg) <= li.bound && li.nu_g <= li.bound;
    return li;
}

} // namespace minsurf
