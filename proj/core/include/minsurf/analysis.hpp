#pragma once

#include <string>
#include <vector>

#include "minsurf/surface.hpp"

namespace minsurf {

struct TotallyRamifiedValue {
    SpherePoint value;
    bool exceptional; // infinite weight
    int nu;           // minimal multiplicity over preimages in M (when finite)
};

struct RamificationTotals {
    int d = 0, G = 0, k = 0;
    int n_g = 0, n_0 = 0, n_b = 0;
    int r0 = 0, l = 0;
    bool identity_ok = false;       // n_g == 2(d+G-1) and n_0 + n_b == n_g
    bool puncture_bound_ok = false; // k >= d*r0 - n_0
    bool nb_ge_l = false;
};

struct RegularityReport {
    bool ok = true;
    std::vector<std::string> witnesses;
};

struct CompletenessReport {
    std::vector<int> mu;              // pole order of hdz at each puncture
    std::vector<int> end_order;       // metric end order (g-poles included)
    std::vector<double> ray_exponent; // numeric divergence witness per end
    bool divisor_tier = false;        // all mu_j >= 1
    bool complete = false;            // all end orders >= 1
    bool algebraic_type = false;      // all end orders >= 2
    bool euler_ok = false;            // deg div(hdz) == 2G - 2
};

struct BoundsReport {
    Rational invR{0};
    Rational bound{0};         // 2 + 2/R
    Rational refined_bound{0}; // 2 + 2/R - l/d
    bool hyperbolic = false;
    bool dg_ok = false, dg_refined_ok = false, nu_ok = false, chain_ok = false;
    bool invR_ok = false, nu_strict_ok = false;
    bool eq_dg = false, eq_dg_refined = false, eq_nu = false;
};

struct AnalysisReport {
    int d = 0, G = 0, k = 0;
    int Dg = 0, l = 0;
    Rational nu_g{0};
    std::vector<SpherePoint> exceptional;
    std::vector<TotallyRamifiedValue> totally_ramified;
    RamificationTotals rh;
    RegularityReport regularity;
    CompletenessReport completeness;
    BoundsReport bounds;
    bool exact = false;

    bool all_ok() const { return violations().empty(); }
    std::vector<std::string> violations() const;
};

struct AnalyzeOptions {
    double eps = kPointTol;
    bool ray_witness = true; // sample the metric along rays into each end
};

/// Full analysis: degrees, omitted and totally ramified values, branching
/// totals, regularity, completeness, and every bound with equality flags.
AnalysisReport analyze(const WeierstrassSurface& S, const AnalyzeOptions& opt = {});

/// Throws check_error listing each violated relation of the report.
void enforce(const AnalysisReport& report);

/// The omitted-value set of g on M (values whose full preimage lies in the
/// punctures).
std::vector<SpherePoint> exceptional_values(const WeierstrassSurface& S);

/// (G - 1 + k/2) / d as an exact rational.
Rational ratio_inv_R(int G, int k, int d);

RegularityReport regularity_check(const WeierstrassSurface& S);
CompletenessReport completeness_check(const WeierstrassSurface& S, bool ray_witness = true);

/// Branching totals for bare sphere data (no hdz needed).
RamificationTotals branching_totals(const RationalFunction& g,
                                    const std::vector<SpherePoint>& punctures);

RamificationTotals riemann_hurwitz_check(const WeierstrassSurface& S);

struct LowGenusDiagnosis {
    bool applicable = false; // surface is of algebraic type
    bool triggered_g0 = false;
    bool triggered_g1 = false;
    bool pass = true;
    std::vector<std::string> notes;
};

/// Genus-0/1 consequences for algebraic-type data: G=0 forces Dg <= 2; for
/// G=1 with Dg=3 the map cannot branch in M, d = k, and every end is
/// embedded.
LowGenusDiagnosis low_genus_diagnostics(const WeierstrassSurface& S, const AnalysisReport& report);

struct UnicityReport {
    std::vector<SpherePoint> values; // verified shared-fiber values
    std::vector<int> delta;          // #(preimage points in M) per value
    int q = 0;
    Rational bound{0}; // 4 + 2/R
    bool q_ok = false;
    int sum_delta = 0;
    bool delta_ok = false; // sum delta <= 2d
};

/// Scan two same-degree Gauss maps on one basic domain for values with equal
/// puncture-filtered fibers.
UnicityReport unicity_scan(const WeierstrassSurface& s1, const WeierstrassSurface& s2);

/// Order table of g, hdz and g*hdz over every point of their supports,
/// punctures marked; the raw data behind the text report.
struct DivisorTable {
    struct Row {
        std::string point;
        bool puncture;
        int g_ord, hdz_ord;
    };
    std::vector<Row> rows;
};
DivisorTable divisor_table(const WeierstrassSurface& S);

} // namespace minsurf
