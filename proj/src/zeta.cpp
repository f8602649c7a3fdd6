#include "hzeta/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "hzeta/specialfun.hpp"

namespace hzeta {

Complex fredholm_det(const OperatorMatrix& op) {
    auto det_one = [&](const Matrix& A, const Matrix& Q) {
        int n = int(A.rows());
        Matrix M = Matrix::Identity(n, n) - A - Q;
        return Eigen::PartialPivLU<Matrix>(M).determinant();
    };
    Complex out(1.0, 0.0);
    if (op.weight_sign >= 0) out *= det_one(op.A_plus, op.Q_plus);
    if (op.weight_sign <= 0) out *= det_one(op.A_minus, op.Q_minus);
    return out;
}

ZetaValue zeta_operator(const SurfaceParams& params, const Complex& s, int N,
                        ZetaWhich which, ParabolicMethod method) {
    auto eval = [&](int basis) {
        switch (which) {
            case ZetaWhich::Zplus: return fredholm_det(assemble_pm(params, s, basis, +1, method));
            case ZetaWhich::Zminus: return fredholm_det(assemble_pm(params, s, basis, -1, method));
            default: return fredholm_det(assemble_full(params, s, basis, method));
        }
    };
    Complex v = eval(N);
    Complex v_half = eval(std::max(8, N / 2));
    ZetaValue out;
    out.value = v;
    out.error_estimate = std::abs(v - v_half);
    out.method = ZetaMethod::OperatorDet;
    return out;
}

// ---------------------------------------------------------------------------
// Euler products
// ---------------------------------------------------------------------------

ZetaValue zeta_euler(const SurfaceParams& params, const Complex& s, ZetaWhich which,
                     int max_word_length, int k_max, double norm_cap_override,
                     double det_minus_cap) {
    double sigma = s.real();
    if (!(sigma > 1.0))
        throw Error("zeta_euler: requires Re s > 1 for desk-scale convergence");
    const double cutoff = 1e-15;
    double bound = std::pow(cutoff, -1.0 / sigma);
    bound = std::min(bound, 1e8);
    bound = std::max(bound, 1e3);
    if (norm_cap_override > 0.0) bound = norm_cap_override;

    SystemKind kind = which == ZetaWhich::Z ? SystemKind::I : SystemKind::IJplus;
    auto sys = build_system(kind, params);
    auto classes = periodic_classes(sys, max_word_length, bound);

    // log contributions per word-length shell, in shell order
    std::vector<Complex> shells(max_word_length + 1, Complex(0.0, 0.0));
    for (const auto& c : classes) {
        if (!c.primitive) continue;
        if (det_minus_cap > 0.0 && c.det_sign < 0 && c.norm_value > det_minus_cap) continue;
        double d = double(c.det_sign);
        Complex lg(0.0, 0.0);
        for (int k = 0; k <= k_max; ++k) {
            double dk = (k % 2 == 0) ? 1.0 : d;         // det^k
            double dk1 = (k % 2 == 0) ? d : 1.0;        // det^{k+1}
            Complex npow = std::exp(-(s + double(k)) * std::log(c.norm_value));
            Complex factor;
            switch (which) {
                case ZetaWhich::Z: factor = 1.0 - npow; break;
                case ZetaWhich::Zplus: factor = 1.0 - dk * npow; break;
                case ZetaWhich::Zminus: factor = 1.0 - dk1 * npow; break;
            }
            lg += std::log(factor);
        }
        shells[c.word_length] += lg;
    }

    Complex total(0.0, 0.0);
    double last_nonzero = 0.0;
    std::vector<double> mags;
    for (int l = 1; l <= max_word_length; ++l) {
        total += shells[l];
        double m = std::abs(shells[l]);
        if (m > 0.0) {
            mags.push_back(m);
            last_nonzero = m;
        }
    }
    if (mags.size() >= 4) {
        // a genuinely growing tail means the product is not converging
        bool growing = mags[mags.size() - 1] > 4.0 * mags[mags.size() - 3] &&
                       mags[mags.size() - 1] > 1e-8;
        if (growing)
            throw ConvergenceFailure("zeta_euler: word-length shell contributions "
                                     "are not decreasing");
    }
    ZetaValue out;
    out.value = std::exp(total);
    out.error_estimate = last_nonzero;
    out.method = ZetaMethod::EulerProduct;
    return out;
}

// ---------------------------------------------------------------------------
// orbit trace sums with analytic parabolic tails
// ---------------------------------------------------------------------------

namespace {

struct TermCoeffs {
    // term(t) ~ c0 |t|^{-2s} + c1 |t|^{-2s-2} + c2 |t|^{-2s-4} + O(|t|^{-2s-6})
    Complex c0, c1, c2;
};

// expansion of N^{-s} / (1 - d N^{-1}) resp. N^{-s} in the trace |t|,
// where N = mu^2, mu = (|t| + sqrt(t^2 - 4d))/2
TermCoeffs term_coeffs(const Complex& s, double d, bool partition) {
    TermCoeffs c;
    c.c0 = 1.0;
    if (partition) {
        c.c1 = 2.0 * s * d;
        c.c2 = s * (2.0 * s + 3.0);
    } else {
        c.c1 = d * (2.0 * s + 1.0);
        c.c2 = (2.0 * s + 3.0) * (s + 1.0);
    }
    return c;
}

Complex term_exact(double t, double d, const Complex& s, bool partition) {
    t = std::fabs(t);
    if (d < 0 && t < 1e-12) return Complex(0.0, 0.0); // order-2 elliptic
    double mu = (t + std::sqrt(t * t - 4.0 * d)) / 2.0;
    Complex npow = std::exp(-2.0 * s * std::log(mu));
    if (partition) return npow;
    return npow / (1.0 - d / (mu * mu));
}

// sum_{n > J} |alpha n + beta|^{-w}-type tails by Hurwitz zeta
Complex affine_tail(double alpha, double beta, int J, const Complex& s, double d,
                    bool partition) {
    if (std::fabs(alpha) < 1e-9)
        throw Error("orbit_trace_sum: degenerate parabolic family (constant trace)");
    double q0 = double(J + 1) + beta / alpha;
    if (!(q0 > 0.5))
        throw Error("orbit_trace_sum: tail shift too small; increase the box");
    double aa = std::fabs(alpha);
    TermCoeffs c = term_coeffs(s, d, partition);
    Complex out(0.0, 0.0);
    out += c.c0 * std::pow(aa, 0.0) * std::exp(-2.0 * s * std::log(aa)) *
           hurwitz_zeta(2.0 * s, q0);
    out += c.c1 * std::exp(-(2.0 * s + 2.0) * std::log(aa)) * hurwitz_zeta(2.0 * s + 2.0, q0);
    out += c.c2 * std::exp(-(2.0 * s + 4.0) * std::log(aa)) * hurwitz_zeta(2.0 * s + 4.0, q0);
    return out;
}

struct SkeletonWork {
    const BranchSystem& sys;
    const Complex& s;
    bool partition;
    int box = 60;     // per-slot exact summation range
    int outer = 600;  // numeric range of the outer sum in double tails
    Complex total = Complex(0.0, 0.0);

    // letters of the current skeleton
    std::vector<int> fams;
    std::vector<int> slots; // positions of parabolic letters

    double weight = 1.0;
    int dets = 1;

    GroupElement product_at(const std::vector<int>& idx) const {
        GroupElement m;
        int slot = 0;
        for (size_t i = 0; i < fams.size(); ++i) {
            int n = 0;
            if (sys.families[fams[i]].parabolic) n = idx[slot++];
            m = sys.families[fams[i]].element_at(n) * m;
        }
        return m;
    }
    double trace_at(const std::vector<int>& idx) const { return product_at(idx).trace(); }

    Complex term_at(const std::vector<int>& idx) const {
        GroupElement m = product_at(idx);
        double t = std::fabs(m.trace());
        double d = double(m.det_sign());
        if (d > 0 && t <= 2.0 + 1e-12) return Complex(0.0, 0.0); // non-hyperbolic
        return weight * term_exact(t, d, s, partition);
    }

    void run() {
        int k = int(slots.size());
        if (k == 0) {
            std::vector<int> idx;
            total += term_at(idx);
            return;
        }
        std::vector<int> idx(k, 1);
        // exact box
        while (true) {
            total += term_at(idx);
            int p = 0;
            while (p < k && ++idx[p] > box) idx[p++] = 1;
            if (p == k) break;
        }
        double d = double(dets);
        // single-slot tails, all other slots inside the box
        for (int sl = 0; sl < k; ++sl) {
            std::vector<int> other(k, 1);
            bool more = true;
            while (more) {
                auto at = [&](int n) {
                    std::vector<int> idx2 = other;
                    idx2[sl] = n;
                    return trace_at(idx2);
                };
                double t1 = at(box + 1), t2 = at(box + 2);
                double alpha = t2 - t1;
                double beta = t1 - alpha * double(box + 1);
                total += weight * affine_tail(alpha, beta, box, s, d, partition);
                int p = 0;
                while (p < k) {
                    if (p == sl) {
                        ++p;
                        continue;
                    }
                    if (++other[p] > box) {
                        other[p++] = 1;
                    } else {
                        break;
                    }
                }
                if (p == k) more = false;
            }
        }
        if (k == 2) both_exceed_tail();
        // k >= 3: double-and-higher joint tails are below 1e-9 at the Re s
        // used by the checks and are dropped
    }

    // sum over n1 > box, n2 > box for two-slot skeletons: exact inner Hurwitz
    // tail in n2 for each numeric n1, plus a closed outer remainder
    void both_exceed_tail() {
        double d = double(dets);
        auto tr = [&](int n1, int n2) {
            std::vector<int> idx = {n1, n2};
            return trace_at(idx);
        };
        // bilinear trace t = P n1 n2 + Q n1 + R n2 + S
        double t11 = tr(box + 1, box + 1), t12 = tr(box + 1, box + 2);
        double t21 = tr(box + 2, box + 1), t22 = tr(box + 2, box + 2);
        double P = t22 - t21 - t12 + t11;
        double Q = (t21 - t11) - P * double(box + 1);
        double R = (t12 - t11) - P * double(box + 1);
        double S = t11 - P * double(box + 1) * double(box + 1) - (Q + R) * double(box + 1);
        for (int n1 = box + 1; n1 <= outer; ++n1) {
            double alpha = P * n1 + R;
            double beta = Q * n1 + S;
            total += weight * affine_tail(alpha, beta, box, s, d, partition);
        }
        // outer remainder with the limiting inner value
        if (std::fabs(P) < 1e-9)
            throw Error("orbit_trace_sum: degenerate bilinear family");
        double qinf = double(box + 1) + Q / P;
        Complex ginf = hurwitz_zeta(2.0 * s, qinf);
        Complex rest = std::exp(-2.0 * s * std::log(std::fabs(P))) * ginf *
                       hurwitz_zeta(2.0 * s, double(outer + 1) + R / P);
        total += weight * rest;
    }
};

} // namespace

Complex orbit_trace_sum(const BranchSystem& sys, int n, const Complex& s, bool partition) {
    if (n < 1) throw Error("orbit_trace_sum: n must be positive");
    if (sys.kind == SystemKind::P || sys.kind == SystemKind::R)
        throw Error("orbit_trace_sum: only the accelerated systems I and IJ are supported");
    Complex total(0.0, 0.0);
    int nf = int(sys.families.size());
    std::vector<int> seq;
    // enumerate all admissible cyclic sequences of length n over the families
    auto rec = [&](auto&& self) -> void {
        int l = int(seq.size());
        if (l == n) {
            if (!sys.family_transition(seq.back(), seq.front())) return;
            SkeletonWork w{sys, s, partition};
            w.fams = seq;
            for (int i = 0; i < n; ++i)
                if (sys.families[seq[i]].parabolic) w.slots.push_back(i);
            w.weight = 1.0;
            w.dets = 1;
            for (int i = 0; i < n; ++i) {
                w.weight *= double(sys.families[seq[i]].weight);
                w.dets *= sys.families[seq[i]].element.det_sign();
            }
            // smaller exact box for many-slot skeletons; their terms decay fast
            if (w.slots.size() >= 3) w.box = 16;
            w.run();
            total += w.total;
            return;
        }
        for (int f = 0; f < nf; ++f) {
            if (l > 0 && !sys.family_transition(seq[l - 1], f)) continue;
            seq.push_back(f);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    return total;
}

TraceSeriesResult trace_series(const SurfaceParams& params, const Complex& s, int N,
                               int n_max) {
    if (n_max < 1) throw Error("trace_series: n_max must be positive");
    OperatorMatrix op = assemble_full(params, s, N);
    double rho = spectral_radius(op);
    if (!(rho < 0.999))
        throw SpectralRadiusExceeded("trace_series: spectral radius " + std::to_string(rho) +
                                     " at Re s = " + std::to_string(s.real()));
    TraceSeriesResult out;

    auto accumulate = [&](const Matrix& A, const Matrix& Q, std::vector<Complex>& traces) {
        int m = int(A.rows());
        Matrix M = Matrix::Zero(2 * m, 2 * m);
        M.topLeftCorner(m, m) = A;
        M.topRightCorner(m, m) = Q;
        M.bottomLeftCorner(m, m) = Matrix::Identity(m, m);
        Matrix P = M;
        for (int n = 1; n <= n_max; ++n) {
            traces[n] += P.trace();
            if (n < n_max) P = P * M;
        }
    };
    std::vector<Complex> traces(n_max + 1, Complex(0.0, 0.0));
    accumulate(op.A_plus, op.Q_plus, traces);
    accumulate(op.A_minus, op.Q_minus, traces);
    Complex acc(0.0, 0.0);
    double last = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        Complex inc = traces[n] / double(n);
        acc -= inc;
        last = std::abs(inc);
    }
    out.matrix_path = {std::exp(acc), last, ZetaMethod::TraceSeries};

    auto sysI = build_system(SystemKind::I, params);
    int n_orb = std::min(n_max, 8);
    Complex acc_orb(0.0, 0.0);
    double last_orb = 0.0;
    for (int n = 1; n <= n_orb; ++n) {
        Complex tr = orbit_trace_sum(sysI, n, s);
        acc_orb -= tr / double(n);
        last_orb = std::abs(tr / double(n));
        out.partition_zn.push_back(orbit_trace_sum(sysI, n, s, true));
    }
    out.orbit_path = {std::exp(acc_orb), last_orb, ZetaMethod::TraceSeries};
    return out;
}

} // namespace hzeta
