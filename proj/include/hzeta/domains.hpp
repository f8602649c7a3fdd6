#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hzeta/moebius.hpp"

namespace hzeta {

// A disc in the Riemann sphere with center on the real axis. For E3, which is
// a half-plane, the disc is stored as the calT-image of the bounded disc E2
// (chart holds the involution).
struct Disc {
    double center = 0.0;
    double radius = 1.0;
    std::optional<GroupElement> chart; // region = chart.(bounded disc) when set

    Disc() = default;
    Disc(double c, double r) : center(c), radius(r) {}
    static Disc over(double lo, double hi) { return Disc((lo + hi) / 2.0, (hi - lo) / 2.0); }

    double lo() const { return center - radius; }
    double hi() const { return center + radius; }
    bool contains(const Complex& z, double tol = 0.0) const {
        return std::abs(z - Complex(center, 0.0)) < radius - tol;
    }
};

struct StandardDiscs {
    Disc E1, E2, E3;
};

// The paper's prose and displayed definitions of E2 disagree; the prose disc
// (boundary points 3/(2-lambda) and 1/lambda) is the one consistent with the
// inclusion h1^n . cl(E1) in E2 and is the default.
enum class E2Variant { Prose, Displayed };

StandardDiscs standard_discs(const SurfaceParams& params,
                             E2Variant variant = E2Variant::Prose);

// Moebius image of a bounded disc; the center stays real because the map has
// real coefficients. Throws PoleInClosure when the pole of g meets the closed
// disc (the image would be unbounded).
Disc image_disc(const GroupElement& g, const Disc& d);

// Signed margin of "closure(inner) inside open(outer)": positive iff included.
inline double inclusion_margin(const Disc& inner, const Disc& outer) {
    return outer.radius - std::fabs(inner.center - outer.center) - inner.radius;
}

struct InclusionCondition {
    std::string name;
    double margin; // positive = satisfied
    bool ok() const { return margin > 0.0; }
};

struct InclusionReport {
    double lambda = 0.0;
    int n_max = 0;
    std::vector<InclusionCondition> conditions;
    bool all_ok() const {
        for (const auto& c : conditions)
            if (!c.ok()) return false;
        return true;
    }
    double min_margin() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& c : conditions) m = std::min(m, c.margin);
        return m;
    }
};

// Numerical check of the disc inclusions behind the nuclearity argument plus
// the extra ones the weighted operators need. Does not throw on failure.
InclusionReport inclusion_report(const SurfaceParams& params, int n_max,
                                 E2Variant variant = E2Variant::Prose);

// Same, but a failed condition is a hard configuration error.
InclusionReport verify_inclusions(const SurfaceParams& params, int n_max);

} // namespace hzeta
