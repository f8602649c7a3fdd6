#include "hzeta/domains.hpp"

#include <cmath>

namespace hzeta {

StandardDiscs standard_discs(const SurfaceParams& params, E2Variant variant) {
    double lam = params.lambda;
    StandardDiscs out;
    out.E1 = Disc::over(2.0 / (lam + 2.0), 2.0 / (lam - 2.0));
    if (variant == E2Variant::Prose) {
        out.E2 = Disc::over(3.0 / (2.0 - lam), 1.0 / lam);
    } else {
        // displayed formula: center (lam-1)/(lam(2-lam)), radius (3-2lam)/(lam(2-lam))
        out.E2 = Disc((lam - 1.0) / (lam * (2.0 - lam)),
                      (3.0 - 2.0 * lam) / (lam * (2.0 - lam)));
    }
    out.E3 = out.E2;
    out.E3.chart = elem_calT(lam);
    return out;
}

Disc image_disc(const GroupElement& g, const Disc& d) {
    if (d.chart)
        throw Error("image_disc: only Identity-chart discs are supported");
    auto p = g.pole();
    if (!p) {
        // affine map x -> (a x + b)/d
        double scale = g.a() / g.d();
        return Disc(g.apply_real(d.center), std::fabs(scale) * d.radius);
    }
    if (std::fabs(*p - d.center) <= d.radius)
        throw PoleInClosure("image_disc: pole " + std::to_string(*p) +
                            " meets the closed disc [" + std::to_string(d.lo()) + ", " +
                            std::to_string(d.hi()) + "]");
    double w1 = g.apply_real(d.lo());
    double w2 = g.apply_real(d.hi());
    return Disc::over(std::min(w1, w2), std::max(w1, w2));
}

InclusionReport inclusion_report(const SurfaceParams& params, int n_max, E2Variant variant) {
    double lam = params.lambda;
    auto discs = standard_discs(params, variant);
    const Disc& E1 = discs.E1;
    const Disc& E2 = discs.E2;

    GroupElement h1 = elem_h(1, lam);
    GroupElement h2 = elem_h(2, lam);
    GroupElement calT = elem_calT(lam);
    GroupElement h2i = h2.inverse();
    GroupElement h2Ti = calT * h2i; // (h2 calT)^{-1}

    InclusionReport rep;
    rep.lambda = lam;
    rep.n_max = n_max;

    const double eq_tol = 1e-9;
    auto add = [&](const std::string& name, double margin) {
        rep.conditions.push_back({name, margin});
    };

    // calT fixes E1 (swapping the boundary points) and sends E2 to E3.
    {
        Disc im = image_disc(calT, E1);
        double dev = std::fabs(im.center - E1.center) + std::fabs(im.radius - E1.radius);
        add("calT.E1 == E1", eq_tol - dev);
    }
    {
        // E3 is represented through its chart over E2; the identity is
        // structural, so check that the chart is the stored involution.
        double dev = discs.E3.chart && discs.E3.chart->equals(calT) ? 0.0 : 1.0;
        dev += std::fabs(discs.E3.center - E2.center) + std::fabs(discs.E3.radius - E2.radius);
        add("calT.E2 == E3 (chart)", eq_tol - dev);
    }
    add("h2^-1 . cl(E1) in E1", inclusion_margin(image_disc(h2i, E1), E1));
    add("(h2 calT)^-1 . cl(E1) in E1", inclusion_margin(image_disc(h2Ti, E1), E1));

    for (int n = 1; n <= n_max; ++n) {
        Disc im = image_disc(h1.pow(n), E1);
        add("h1^" + std::to_string(n) + " . cl(E1) in E2", inclusion_margin(im, E2));
    }
    // n -> infinity limit: the images shrink to {0}
    add("h1^inf limit {0} in E2", inclusion_margin(Disc(0.0, 0.0), E2));

    // convergence disc |z| < 1/lambda of the continued parabolic block
    Disc conv(0.0, 1.0 / lam);
    for (int n = 1; n <= n_max; ++n) {
        Disc im = image_disc(h1.pow(-n), E1);
        add("h1^-" + std::to_string(n) + " . cl(E1) in {|z|<1/lambda}",
            inclusion_margin(im, conv));
    }
    add("h1^-inf limit {0} in {|z|<1/lambda}", inclusion_margin(Disc(0.0, 0.0), conv));

    return rep;
}

InclusionReport verify_inclusions(const SurfaceParams& params, int n_max) {
    InclusionReport rep = inclusion_report(params, n_max, E2Variant::Prose);
    for (const auto& c : rep.conditions)
        if (!c.ok()) throw InclusionViolated(c.name, c.margin);
    return rep;
}

} // namespace hzeta
