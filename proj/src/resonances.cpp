#include "hzeta/resonances.hpp"

#include <cmath>

#include "hzeta/parallel.hpp"

namespace hzeta {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

double pole_distance(const Complex& s) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 512; ++k)
        best = std::min(best, std::abs(s - Complex((1.0 - k) / 2.0, 0.0)));
    return best;
}

Complex z_at(const SurfaceParams& params, const Complex& s, int N) {
    return fredholm_det(assemble_full(params, s, N));
}

} // namespace

DeltaResult find_delta(const SurfaceParams& params, int N, double tol) {
    verify_inclusions(params, 24);
    auto lam_max = [&](double s) {
        return spectral_radius(assemble_full(params, Complex(s, 0.0), N));
    };
    double lo = 0.505, hi = 0.999;
    double flo = lam_max(lo);
    if (!(flo > 1.0))
        throw NotBracketed("find_delta: lambda_max(" + std::to_string(lo) + ") = " +
                           std::to_string(flo) + " < 1; delta <= 1/2 numerically, "
                           "inconsistent with delta > 1/2");
    double fhi = lam_max(hi);
    if (!(fhi < 1.0))
        throw NotBracketed("find_delta: lambda_max(0.999) >= 1; delta not below 1");
    while (hi - lo > 1e-3) {
        double mid = (lo + hi) / 2.0;
        (lam_max(mid) > 1.0 ? lo : hi) = mid;
    }
    // secant on log lambda_max
    double s0 = lo, s1 = hi;
    double f0 = std::log(lam_max(s0)), f1 = std::log(lam_max(s1));
    double s2 = s1, f2 = f1;
    for (int it = 0; it < 80; ++it) {
        if (f1 == f0) break;
        s2 = s1 - f1 * (s1 - s0) / (f1 - f0);
        if (s2 < 0.5 || s2 > 1.0) s2 = (s0 + s1) / 2.0;
        f2 = std::log(lam_max(s2));
        s0 = s1;
        f0 = f1;
        s1 = s2;
        f1 = f2;
        if (std::fabs(f2) < 1e-13 && std::fabs(s1 - s0) < tol) break;
    }
    DeltaResult out;
    out.delta = s2;
    out.lambda_max_residual = std::fabs(std::exp(f2) - 1.0);
    out.z_abs = std::abs(z_at(params, Complex(s2, 0.0), N));
    if (!(out.z_abs < 10.0 * std::max(tol, 1e-9)))
        throw Error("find_delta: |Z(delta)| = " + std::to_string(out.z_abs) +
                    " fails the cross-check");
    return out;
}

GridResult scan_grid(const SurfaceParams& params, const Box& region, double step, int N,
                     int threads) {
    if (!(step > 0.0)) throw ConfigError("scan_grid: step must be positive");
    GridResult grid;
    grid.region = region;
    grid.step = step;
    grid.N = N;
    grid.lambda = params.lambda;
    grid.n_re = int(std::floor((region.re_hi - region.re_lo) / step + 1e-9)) + 1;
    grid.n_im = int(std::floor((region.im_hi - region.im_lo) / step + 1e-9)) + 1;
    grid.points.resize(std::size_t(grid.n_re) * grid.n_im);

    parallel_for_index(grid.points.size(), threads, [&](std::size_t idx) {
        int i = int(idx) / grid.n_re; // im index
        int j = int(idx) % grid.n_re; // re index
        double re = region.re_lo + j * step;
        double im = region.im_lo + i * step;
        Complex s(re, im);
        GridPoint p{re, im, Complex(std::nan(""), std::nan("")), 0};
        if (pole_distance(s) < 1e-2) {
            p.flag = 1;
        } else {
            try {
                p.z = z_at(params, s, N);
            } catch (const Error&) {
                p.flag = 2;
            }
        }
        grid.points[idx] = p;
    });
    return grid;
}

namespace {

struct ZCache {
    const SurfaceParams& params;
    int N;
    Complex operator()(const Complex& s) const { return z_at(params, s, N); }
    Complex derivative(const Complex& s) const {
        double h = 1e-6 * std::max(1.0, std::abs(s));
        return ((*this)(s + Complex(h, 0)) - (*this)(s - Complex(h, 0))) / (2.0 * h);
    }
};

// winding of Z along the rectangle boundary, by the trapezoid rule on the
// numerical log-derivative with doubling until the value is nearly integral
double winding_raw(const ZCache& zf, const Box& box, int subdiv) {
    std::vector<Complex> corners = {
        Complex(box.re_lo, box.im_lo), Complex(box.re_hi, box.im_lo),
        Complex(box.re_hi, box.im_hi), Complex(box.re_lo, box.im_hi)};
    Complex integral(0.0, 0.0);
    for (int e = 0; e < 4; ++e) {
        Complex a = corners[e], b = corners[(e + 1) % 4];
        int m = subdiv;
        Complex ds = (b - a) / double(m);
        Complex gprev = zf.derivative(a) / zf(a);
        for (int k = 1; k <= m; ++k) {
            Complex sk = a + ds * double(k);
            Complex gk = zf.derivative(sk) / zf(sk);
            integral += 0.5 * (gprev + gk) * ds;
            gprev = gk;
        }
    }
    return (integral / Complex(0.0, kTwoPi)).real();
}

int winding_checked(const ZCache& zf, const Box& box) {
    int subdiv = 8;
    double prev = 1e9;
    for (int level = 0; level < 9; ++level) {
        double w = winding_raw(zf, box, subdiv);
        double nearest = std::round(w);
        if (std::fabs(w - nearest) < 1e-3 && std::fabs(w - prev) < 5e-3)
            return int(nearest);
        prev = w;
        subdiv *= 2;
    }
    throw WindingNotIntegral("winding number did not stabilize on box [" +
                             std::to_string(box.re_lo) + "," + std::to_string(box.re_hi) +
                             "]x[" + std::to_string(box.im_lo) + "," +
                             std::to_string(box.im_hi) + "]");
}

Complex refine_newton(const ZCache& zf, Complex s, bool& ok) {
    ok = false;
    for (int it = 0; it < 60; ++it) {
        Complex f = zf(s);
        if (std::abs(f) < 1e-13) {
            ok = true;
            return s;
        }
        Complex d = zf.derivative(s);
        if (std::abs(d) < 1e-14) break;
        Complex stepv = f / d;
        s -= stepv;
        if (std::abs(stepv) < 1e-12) {
            ok = std::abs(zf(s)) < 1e-9;
            return s;
        }
        if (std::abs(stepv) > 10.0) break; // diverging
    }
    return s;
}

Complex refine_muller(const ZCache& zf, Complex s, bool& ok) {
    Complex x0 = s + Complex(1e-4, 0), x1 = s + Complex(0, 1e-4), x2 = s;
    Complex f0 = zf(x0), f1 = zf(x1), f2 = zf(x2);
    ok = false;
    for (int it = 0; it < 80; ++it) {
        Complex q = (x2 - x1) / (x1 - x0);
        Complex a = q * f2 - q * (1.0 + q) * f1 + q * q * f0;
        Complex b = (2.0 * q + 1.0) * f2 - (1.0 + q) * (1.0 + q) * f1 + q * q * f0;
        Complex c = (1.0 + q) * f2;
        Complex rad = std::sqrt(b * b - 4.0 * a * c);
        Complex den1 = b + rad, den2 = b - rad;
        Complex den = std::abs(den1) > std::abs(den2) ? den1 : den2;
        if (std::abs(den) < 1e-300) break;
        Complex x3 = x2 - (x2 - x1) * 2.0 * c / den;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        x2 = x3;
        f2 = zf(x3);
        if (std::abs(f2) < 1e-12) {
            ok = true;
            return x2;
        }
    }
    return x2;
}

void collect_zeros(const ZCache& zf, const Box& box, int depth, std::vector<Zero>& out) {
    int w = winding_checked(zf, box);
    if (w == 0) return;
    double size = std::max(box.width(), box.height());
    if (w == 1 || size < 0.02 || depth > 14) {
        Complex center((box.re_lo + box.re_hi) / 2.0, (box.im_lo + box.im_hi) / 2.0);
        bool ok = false;
        Complex z = refine_newton(zf, center, ok);
        if (!ok) z = refine_muller(zf, center, ok);
        double res = std::abs(zf(z));
        if (!ok || res > 1e-9)
            throw Error("locate_zeros: refinement failed near " + std::to_string(center.real()) +
                        "+" + std::to_string(center.imag()) + "i (residual " +
                        std::to_string(res) + ")");
        // multiplicity w > 1 means a multiple zero or an unresolved cluster;
        // the refined point is reported once per count so the box total still
        // matches the winding number
        for (int k = 0; k < w; ++k) out.push_back({z, res});
        return;
    }
    Box b1 = box, b2 = box;
    if (box.width() >= box.height()) {
        double mid = (box.re_lo + box.re_hi) / 2.0;
        b1.re_hi = mid;
        b2.re_lo = mid;
    } else {
        double mid = (box.im_lo + box.im_hi) / 2.0;
        b1.im_hi = mid;
        b2.im_lo = mid;
    }
    collect_zeros(zf, b1, depth + 1, out);
    collect_zeros(zf, b2, depth + 1, out);
}

} // namespace

int winding_number(const SurfaceParams& params, const Box& box, int N) {
    ZCache zf{params, N};
    return winding_checked(zf, box);
}

std::vector<Zero> locate_zeros(const SurfaceParams& params, const Box& box, int N) {
    // poles of the continued operator family must stay away from the contour,
    // and boxes containing pole points are rejected outright
    for (int k = 0; k <= 512; ++k) {
        double p = (1.0 - k) / 2.0;
        if (p < box.re_lo - 0.05) break;
        bool inside_re = p > box.re_lo - 0.05 && p < box.re_hi + 0.05;
        bool crosses_im = box.im_lo < 0.05 && box.im_hi > -0.05;
        if (inside_re && crosses_im) {
            if (p > box.re_lo && p < box.re_hi && box.im_lo < 0.0 && box.im_hi > 0.0)
                throw BoundaryTooClose("locate_zeros: continuation pole s = " +
                                       std::to_string(p) + " inside the box");
            double d = std::min({std::fabs(p - box.re_lo), std::fabs(p - box.re_hi),
                                 std::fabs(box.im_lo), std::fabs(box.im_hi)});
            if (d < 0.05)
                throw BoundaryTooClose("locate_zeros: box boundary within 0.05 of the "
                                       "continuation pole s = " + std::to_string(p));
        }
    }
    ZCache zf{params, N};
    // boundary must stay away from zeros for the winding integral
    for (int e = 0; e < 16; ++e) {
        double t = double(e) / 16.0;
        Complex pts[4] = {
            Complex(box.re_lo + t * box.width(), box.im_lo),
            Complex(box.re_lo + t * box.width(), box.im_hi),
            Complex(box.re_lo, box.im_lo + t * box.height()),
            Complex(box.re_hi, box.im_lo + t * box.height())};
        for (const auto& p : pts)
            if (std::abs(zf(p)) < 1e-10)
                throw BoundaryTooClose("locate_zeros: |Z| < 1e-10 on the box boundary");
    }
    std::vector<Zero> out;
    collect_zeros(zf, box, 0, out);
    std::sort(out.begin(), out.end(), [](const Zero& a, const Zero& b) {
        if (a.s.real() != b.s.real()) return a.s.real() < b.s.real();
        return a.s.imag() < b.s.imag();
    });
    return out;
}

} // namespace hzeta
