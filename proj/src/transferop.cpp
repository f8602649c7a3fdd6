#include "hzeta/transferop.hpp"

#include <cmath>

#include "hzeta/specialfun.hpp"

namespace hzeta {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Boundary sample points of a disc: 2N equispaced points, angle 2*pi*j/(2N).
Eigen::VectorXcd boundary_samples(const Disc& d, int N) {
    Eigen::VectorXcd z(2 * N);
    for (int j = 0; j < 2 * N; ++j) {
        double th = kPi * double(j) / double(N);
        z(j) = Complex(d.center, 0.0) + d.radius * Complex(std::cos(th), std::sin(th));
    }
    return z;
}

// Truncated DFT matrix W (N x 2N): coeff_m = (1/2N) sum_j e^{-i m th_j} val_j.
Matrix dft_matrix(int N) {
    Matrix W(N, 2 * N);
    for (int m = 0; m < N; ++m)
        for (int j = 0; j < 2 * N; ++j) {
            double th = -kPi * double(m) * double(j) / double(N);
            W(m, j) = Complex(std::cos(th), std::sin(th)) / double(2 * N);
        }
    return W;
}

void require_admissible(const GroupElement& h, const Disc& source, const Disc& target,
                        const char* who) {
    auto p = h.pole();
    if (p && std::fabs(*p - target.center) <= target.radius)
        throw PoleInClosure(std::string(who) + ": pole of the evaluation element at " +
                            std::to_string(*p) + " meets the closed target disc");
    Disc im = image_disc(h, target);
    double margin = inclusion_margin(im, source);
    // equality (margin 0) is admitted so that the identity block exists
    if (margin < -1e-12)
        throw InclusionViolated(std::string(who) + ": image of the target disc not inside "
                                                   "the source disc",
                                margin);
}

// Continuation pole lattice (1-k)/2, k >= 0.
double pole_lattice_distance(const Complex& s, int kmax = 512) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kmax; ++k)
        best = std::min(best, std::abs(s - Complex((1.0 - k) / 2.0, 0.0)));
    return best;
}

} // namespace

Matrix compose_block(const GroupElement& h, const Disc& source, const Disc& target,
                     const Complex& s, int N, double weight) {
    if (N < 4) throw Error("compose_block: basis size must be at least 4");
    require_admissible(h, source, target, "compose_block");
    Eigen::VectorXcd z = boundary_samples(target, N);
    Matrix vals(2 * N, N);
    for (int j = 0; j < 2 * N; ++j) {
        Complex w = h.apply(z(j));
        Complex u = (w - Complex(source.center, 0.0)) / source.radius;
        Complex base = weight * cocycle_j(h, s, z(j));
        Complex up(1.0, 0.0);
        for (int k = 0; k < N; ++k) {
            vals(j, k) = base * up;
            up *= u;
        }
    }
    return dft_matrix(N) * vals;
}

namespace {

// entries of the continued parabolic sum evaluated at one target point:
//   sum_{n>=n_start} j_s(h1^n, z) e_k(h1^n . z)
// with e_k the source-disc basis expanded about 0 (binomial coefficients).
// The rewrite uses sum_{n>=n_start} (n lam z - 1)^{-w} = (lam z)^{-w} zeta_H(w, q),
// q = n_start - 1/(lam z); valid because Re z > 0 on the target discs.
Eigen::VectorXcd continued_row(const Complex& z, const Disc& source, double lambda,
                               const Complex& s, int N, int n_start) {
    Complex q = double(n_start) - 1.0 / (lambda * z);
    Complex llz = std::log(lambda * z);
    // zeta_H(2s+m, q) and (lam z)^{-2s-m} for m = 0..N-1
    Eigen::VectorXcd zh(N), pw(N), zpow(N);
    for (int m = 0; m < N; ++m) {
        zh(m) = hurwitz_zeta(2.0 * s + double(m), q);
        pw(m) = std::exp(-(2.0 * s + double(m)) * llz);
        zpow(m) = (m == 0 ? Complex(1.0, 0.0) : zpow(m - 1) * (-z));
    }
    // c_m^{(k)} = binom(k,m) (-c2)^{k-m} r2^{-k}
    Eigen::VectorXcd row(N);
    double c2 = source.center, r2 = source.radius;
    for (int k = 0; k < N; ++k) {
        Complex acc(0.0, 0.0);
        double binom = 1.0;
        double cpow = std::pow(-c2, k); // (-c2)^{k-m}, m = 0 start
        for (int m = 0; m <= k; ++m) {
            acc += binom * cpow * zpow(m) * pw(m) * zh(m);
            binom *= double(k - m) / double(m + 1);
            cpow = (c2 == 0.0 ? (m + 1 == k ? 1.0 : 0.0) : cpow / (-c2));
        }
        row(k) = acc * std::pow(r2, -k);
    }
    return row;
}

Matrix parabolic_continued(const Disc& source, const Disc& target, double lambda,
                           const Complex& s, int N, const GroupElement& h1) {
    // head terms are summed as explicit composition blocks; the zeta rewrite
    // is applied only from n_start on, where the images are small enough that
    // the binomial expansion of the source basis about 0 is cancellation-free
    double rmin = target.lo(), rmax = std::fabs(target.hi());
    int n_start = 2;
    while (rmax / (n_start * lambda * rmin - 1.0) > 0.35 * source.radius) ++n_start;
    Matrix out = Matrix::Zero(N, N);
    for (int n = 1; n < n_start; ++n)
        out += compose_block(h1.pow(n), source, target, s, N);
    Eigen::VectorXcd z = boundary_samples(target, N);
    Matrix vals(2 * N, N);
    for (int j = 0; j < 2 * N; ++j)
        vals.row(j) = continued_row(z(j), source, lambda, s, N, n_start);
    out += dft_matrix(N) * vals;
    return out;
}

Matrix parabolic_direct(const Disc& source, const Disc& target, double lambda,
                        const Complex& s, int N, double tol) {
    double sigma = s.real();
    if (!(sigma > 0.5))
        throw Error("parabolic_block: Direct evaluation requires Re s > 1/2");
    GroupElement h1 = elem_h(1, lambda);
    double rmin = target.lo(); // min Re over the closed target disc
    double rmax = std::fabs(target.hi());
    Matrix out = Matrix::Zero(N, N);
    long n = 0;
    const long cap = 1000000;
    while (true) {
        ++n;
        if (n > cap) throw ConvergenceFailure("parabolic_block: Direct tail cap exceeded");
        out += compose_block(h1.pow(int(n)), source, target, s, N);
        // stop once the error of the tail-corrected sum (next Euler-Maclaurin
        // order, ~ f'' of the summand) is below tolerance; the raw integral
        // tail itself is added in closed form below
        double w0 = 2.0 * sigma;
        double est = (7.0 / 5760.0) * w0 * (w0 + 1.0) * (lambda * rmax) * (lambda * rmax) *
                     std::pow(double(n) * lambda * rmin - 1.0, -2.0 * sigma - 2.0);
        if (est < tol && n >= 8) break;
    }
    // Euler-Maclaurin tail correction of midpoint type:
    //   sum_{t>n} f(t) ~ int_{n+1/2} f - f'(n+1/2)/24 + 7 f'''(n+1/2)/5760,
    // applied per basis column through the expansion about 0. The closed forms
    // int (t lam z - 1)^{-w} dt = ((. )^{1-w})/((w-1) lam z) keep the correction
    // free of any analytic-continuation machinery.
    Eigen::VectorXcd z = boundary_samples(target, N);
    Matrix vals(2 * N, N);
    double c2 = source.center, r2 = source.radius;
    for (int j = 0; j < 2 * N; ++j) {
        Complex lz = lambda * z(j);
        Eigen::VectorXcd tailm(N);
        for (int m = 0; m < N; ++m) {
            Complex w = 2.0 * s + double(m);
            Complex a = (double(n) + 0.5) * lz - 1.0;
            Complex la = std::log(a);
            Complex integral = std::exp((1.0 - w) * la) / ((w - 1.0) * lz);
            Complex corr1 = (w * lz / 24.0) * std::exp((-w - 1.0) * la);
            Complex corr3 = -(7.0 / 5760.0) * w * (w + 1.0) * (w + 2.0) * lz * lz * lz *
                            std::exp((-w - 3.0) * la);
            tailm(m) = integral + corr1 + corr3;
        }
        Complex zp(1.0, 0.0);
        for (int m = 0; m < N; ++m) {
            tailm(m) *= zp;
            zp *= -z(j);
        }
        for (int k = 0; k < N; ++k) {
            Complex acc(0.0, 0.0);
            double binom = 1.0;
            double cpow = std::pow(-c2, k);
            for (int m = 0; m <= k; ++m) {
                acc += binom * cpow * tailm(m);
                binom *= double(k - m) / double(m + 1);
                cpow = (c2 == 0.0 ? (m + 1 == k ? 1.0 : 0.0) : cpow / (-c2));
            }
            vals(j, k) = acc * std::pow(r2, -k);
        }
    }
    out += dft_matrix(N) * vals;
    return out;
}

} // namespace

Matrix parabolic_block(Strand strand, const SurfaceParams& params, const Complex& s,
                       int N, ParabolicMethod method, double tol) {
    if (strand == Strand::B)
        throw Error("parabolic_block: strand b is realized through the symmetrized "
                    "assembly (calT-chart mirror of strand a), never materialized");
    if (N < 4) throw Error("parabolic_block: basis size must be at least 4");
    auto discs = standard_discs(params);
    if (method == ParabolicMethod::Auto)
        method = s.real() > 0.75 ? ParabolicMethod::Direct : ParabolicMethod::Continued;
    if (method == ParabolicMethod::Direct)
        return parabolic_direct(discs.E2, discs.E1, params.lambda, s, N, tol);
    double dist = pole_lattice_distance(s);
    if (dist < 1e-8)
        throw PoleOfContinuation("parabolic_block: s within 1e-8 of a continuation pole");
    return parabolic_continued(discs.E2, discs.E1, params.lambda, s, N,
                               elem_h(1, params.lambda));
}

// ---------------------------------------------------------------------------
// cover construction
// ---------------------------------------------------------------------------

namespace {

Disc fit_cluster(const Disc& cluster, double sing, double theta) {
    double cap = 0.5 * (cluster.center - sing);
    if (!(cap > 0.0))
        throw Error("build_cover: cluster extends past the branch-weight singularity");
    double want = cluster.radius / theta;
    double r = std::min(cap, std::max(want, cluster.radius * 1.5));
    if (r < cluster.radius)
        throw Error("build_cover: cannot host an image cluster clear of the singularity");
    return Disc(cluster.center, r);
}

Disc hull_of(const std::vector<Disc>& ds) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& d : ds) {
        lo = std::min(lo, d.lo());
        hi = std::max(hi, d.hi());
    }
    return Disc::over(lo, hi);
}

} // namespace

DiscCover build_cover(const SurfaceParams& params) {
    double lam = params.lambda;
    GroupElement h1 = elem_h(1, lam);
    GroupElement h2i = elem_h(2, lam).inverse();
    GroupElement th2i = elem_calT(lam) * h2i; // (h2 calT)^{-1}
    double p_h = 2.0 * lam / (3.0 * lam * lam + 4.0);
    double p_t = 2.0 * lam / (3.0 * lam * lam - 4.0);
    double acc = 2.0 / lam; // common accumulation point of the u/v clusters

    double z_h = fixed_points(h2i).first;
    double z_t = fixed_points_any(th2i).first;

    DiscCover cover;
    cover.rc = 0.41 * p_h;
    const double theta = 0.40;

    double fat = 1.5;
    Disc hull;
    {
        double lo = std::min({z_h, z_t, acc});
        double hi = std::max({z_h, z_t, acc});
        Disc base = Disc::over(lo, hi);
        while (fat > 1.12 && base.center - fat * base.radius <= 1.05 * p_t) fat *= 0.9;
        if (base.center - fat * base.radius <= 1.02 * p_t)
            throw Error("build_cover: no workable cover for lambda = " + std::to_string(lam));
        hull = Disc(base.center, fat * base.radius);
    }

    Disc om0(0.0, cover.rc);
    for (int pass = 0; pass < 4; ++pass) {
        Disc Kh = image_disc(h2i, hull);
        Disc Kt = image_disc(th2i, hull);
        Disc Ku1 = image_disc(h2i * h1, hull);
        Disc Kv1 = image_disc(th2i * h1, hull);
        std::vector<Disc> mid = {image_disc(h2i * h1.pow(2), hull),
                                 image_disc(th2i * h1.pow(2), hull),
                                 image_disc(h2i * h1.pow(3), hull),
                                 image_disc(th2i * h1.pow(3), hull),
                                 Disc(acc, 0.0),
                                 image_disc(h2i, om0),
                                 image_disc(th2i, om0)};
        cover.discs.clear();
        cover.discs.push_back(fit_cluster(Kh, p_t, theta));
        cover.discs.push_back(fit_cluster(Ku1, p_t, theta));
        cover.discs.push_back(fit_cluster(hull_of(mid), p_t, theta));
        cover.discs.push_back(fit_cluster(Kv1, p_t, theta));
        cover.discs.push_back(fit_cluster(Kt, p_t, theta));
        hull = hull_of(cover.discs);
    }

    // tail start index: h1^n images of every cover disc must sit deep inside
    // the small disc at 0
    double r_eval = 0.45 * cover.rc;
    double lmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (const auto& d : cover.discs) {
        lmin = std::min(lmin, d.lo());
        rmax = std::max(rmax, std::fabs(d.hi()));
    }
    if (!(lmin > 0.0)) throw Error("build_cover: cover touches the left half-plane");
    cover.n0 = int(std::ceil((rmax / r_eval + 1.0) / (lam * lmin))) + 1;

    // validation: every routed image deep inside its host, singularities clear
    auto kappa = [&](const Disc& im, const Disc& host) {
        return (std::fabs(im.center - host.center) + im.radius) / host.radius;
    };
    cover.kappa_max = 0.0;
    cover.sing_min = std::numeric_limits<double>::infinity();
    auto check_map = [&](const GroupElement& g, int host, bool targets_om0) {
        for (const auto& d : cover.discs)
            cover.kappa_max = std::max(cover.kappa_max, kappa(image_disc(g, d), cover.discs[host]));
        if (auto p = g.pole()) {
            for (const auto& d : cover.discs)
                cover.sing_min = std::min(cover.sing_min, std::fabs(*p - d.center) / d.radius);
            // only the two finite maps are sampled on the small disc (in B0)
            if (targets_om0)
                cover.sing_min = std::min(cover.sing_min, std::fabs(*p) / cover.rc);
        }
    };
    check_map(h2i, cover.host_h, true);
    check_map(th2i, cover.host_t, true);
    for (int n = 1; n < cover.n0; ++n) {
        check_map(h2i * h1.pow(n), n == 1 ? cover.host_u1 : cover.host_m, false);
        check_map(th2i * h1.pow(n), n == 1 ? cover.host_v1 : cover.host_m, false);
    }
    // tail reads from the middle disc
    cover.kappa_max = std::max(cover.kappa_max, kappa(image_disc(h2i, om0), cover.discs[cover.host_m]));
    cover.kappa_max = std::max(cover.kappa_max, kappa(image_disc(th2i, om0), cover.discs[cover.host_m]));
    // h1^{n0} images inside the evaluation radius of the small disc
    for (const auto& d : cover.discs) {
        double top = std::fabs(d.hi()) / (cover.n0 * lam * d.lo() - 1.0);
        if (!(top <= r_eval * 1.05))
            throw Error("build_cover: tail start index does not reach the小 disc");
        cover.kappa_max = std::max(cover.kappa_max, top / cover.rc);
    }
    // the 0-singularity of the tail entries must stay clear of every disc
    for (const auto& d : cover.discs)
        cover.sing_min = std::min(cover.sing_min, std::fabs(d.center) / d.radius);

    if (cover.kappa_max > 0.60)
        throw Error("build_cover: image depth too shallow (kappa = " +
                    std::to_string(cover.kappa_max) + ") for lambda = " + std::to_string(lam));
    if (cover.sing_min < 1.7)
        throw Error("build_cover: singularity too close to a cover disc for lambda = " +
                    std::to_string(lam));
    return cover;
}

// ---------------------------------------------------------------------------
// assembly
// ---------------------------------------------------------------------------

namespace {

struct PmParts {
    Matrix A, Q;
};

PmParts assemble_parts(const SurfaceParams& params, const Complex& s, int N, int sign,
                       ParabolicMethod method, const DiscCover& cover) {
    double lam = params.lambda;
    GroupElement h1 = elem_h(1, lam);
    GroupElement h2i = elem_h(2, lam).inverse();
    GroupElement th2i = elem_calT(lam) * h2i;
    int K = cover.size();
    int KN = K * N;
    Matrix A = Matrix::Zero(KN, KN);
    Matrix Q = Matrix::Zero(KN, KN);
    auto put = [&](Matrix& M, int i, int j, const Matrix& blk) {
        M.block(i * N, j * N, N, N) += blk;
    };

    for (int i = 0; i < K; ++i) {
        const Disc& tgt = cover.discs[i];
        put(A, i, cover.host_h, compose_block(h2i, cover.discs[cover.host_h], tgt, s, N));
        put(A, i, cover.host_t,
            compose_block(th2i, cover.discs[cover.host_t], tgt, s, N, double(sign)));
    }

    if (method == ParabolicMethod::Direct) {
        // cross-validation path: plain term-by-term summation of the
        // parabolic composites, practical for Re s comfortably above 1/2
        double sigma = s.real();
        if (!(sigma > 0.5)) throw Error("assemble: Direct method requires Re s > 1/2");
        long n = 0;
        const long cap = 200000;
        while (true) {
            ++n;
            if (n > cap) throw ConvergenceFailure("assemble: Direct tail cap exceeded");
            GroupElement un = h2i * h1.pow(int(n));
            GroupElement vn = th2i * h1.pow(int(n));
            int host_u = n == 1 ? cover.host_u1 : cover.host_m;
            int host_v = n == 1 ? cover.host_v1 : cover.host_m;
            double term_norm = 0.0;
            for (int i = 0; i < K; ++i) {
                const Disc& tgt = cover.discs[i];
                Matrix bu = compose_block(un, cover.discs[host_u], tgt, s, N);
                Matrix bv = compose_block(vn, cover.discs[host_v], tgt, s, N, double(sign));
                term_norm = std::max({term_norm, bu.cwiseAbs().maxCoeff(),
                                      bv.cwiseAbs().maxCoeff()});
                put(Q, i, host_u, bu);
                put(Q, i, host_v, bv);
            }
            // remaining tail by integral comparison with the current term
            double tail_est = term_norm * double(n) / (2.0 * sigma - 1.0);
            if (tail_est < 1e-9 && n >= cover.n0) break;
        }
        return {std::move(A), std::move(Q)};
    }

    if (pole_lattice_distance(s) < 1e-8)
        throw PoleOfContinuation("assemble: s within 1e-8 of a continuation pole");

    for (int n = 1; n < cover.n0; ++n) {
        GroupElement un = h2i * h1.pow(n);
        GroupElement vn = th2i * h1.pow(n);
        int host_u = n == 1 ? cover.host_u1 : cover.host_m;
        int host_v = n == 1 ? cover.host_v1 : cover.host_m;
        for (int i = 0; i < K; ++i) {
            const Disc& tgt = cover.discs[i];
            put(Q, i, host_u, compose_block(un, cover.discs[host_u], tgt, s, N));
            put(Q, i, host_v, compose_block(vn, cover.discs[host_v], tgt, s, N, double(sign)));
        }
    }
    // tail through the small disc at 0: Q += P_tail * B0
    Disc om0(0.0, cover.rc);
    Matrix B0 = compose_block(h2i, cover.discs[cover.host_m], om0, s, N) +
                double(sign) * compose_block(th2i, cover.discs[cover.host_m], om0, s, N);
    for (int i = 0; i < K; ++i) {
        Eigen::VectorXcd z = boundary_samples(cover.discs[i], N);
        Matrix vals(2 * N, N);
        for (int j = 0; j < 2 * N; ++j) {
            Complex q = double(cover.n0) - 1.0 / (lam * z(j));
            Complex llz = std::log(lam * z(j));
            Complex zp(1.0, 0.0);
            for (int k = 0; k < N; ++k) {
                vals(j, k) = std::pow(cover.rc, -k) * zp *
                             std::exp(-(2.0 * s + double(k)) * llz) *
                             hurwitz_zeta(2.0 * s + double(k), q);
                zp *= -z(j);
            }
        }
        Q.block(i * N, cover.host_m * N, N, N) += dft_matrix(N) * vals * B0;
    }
    return {std::move(A), std::move(Q)};
}

} // namespace

OperatorMatrix assemble_pm(const SurfaceParams& params, const Complex& s, int N, int sign,
                           ParabolicMethod method) {
    if (N < 4 || N > 256) throw Error("assemble: basis size must be in [4, 256]");
    if (sign != 1 && sign != -1) throw Error("assemble_pm: sign must be +1 or -1");
    verify_inclusions(params, 24);
    if (method == ParabolicMethod::Auto) method = ParabolicMethod::Continued;
    OperatorMatrix op;
    op.lambda = params.lambda;
    op.s = s;
    op.basis_n = N;
    op.method = method;
    op.weight_sign = sign;
    op.cover = build_cover(params);
    auto parts = assemble_parts(params, s, N, sign, method, op.cover);
    if (sign > 0) {
        op.A_plus = std::move(parts.A);
        op.Q_plus = std::move(parts.Q);
    } else {
        op.A_minus = std::move(parts.A);
        op.Q_minus = std::move(parts.Q);
    }
    return op;
}

OperatorMatrix assemble_full(const SurfaceParams& params, const Complex& s, int N,
                             ParabolicMethod method) {
    if (N < 4 || N > 256) throw Error("assemble: basis size must be in [4, 256]");
    verify_inclusions(params, 24);
    if (method == ParabolicMethod::Auto) method = ParabolicMethod::Continued;
    OperatorMatrix op;
    op.lambda = params.lambda;
    op.s = s;
    op.basis_n = N;
    op.method = method;
    op.weight_sign = 0;
    op.cover = build_cover(params);
    auto plus = assemble_parts(params, s, N, +1, method, op.cover);
    auto minus = assemble_parts(params, s, N, -1, method, op.cover);
    op.A_plus = std::move(plus.A);
    op.Q_plus = std::move(plus.Q);
    op.A_minus = std::move(minus.A);
    op.Q_minus = std::move(minus.Q);
    return op;
}

namespace {

Matrix companion(const Matrix& A, const Matrix& Q) {
    int n = int(A.rows());
    Matrix M = Matrix::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = A;
    M.topRightCorner(n, n) = Q;
    M.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
    return M;
}

} // namespace

Matrix OperatorMatrix::dense() const {
    if (weight_sign > 0) return companion(A_plus, Q_plus);
    if (weight_sign < 0) return companion(A_minus, Q_minus);
    int n = 2 * block_dim();
    Matrix M = Matrix::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = companion(A_plus, Q_plus);
    M.bottomRightCorner(n, n) = companion(A_minus, Q_minus);
    return M;
}

Complex OperatorMatrix::trace_power(int n) const {
    if (n < 1) throw Error("trace_power: n must be positive");
    auto tr = [&](const Matrix& A, const Matrix& Q) {
        Matrix M = companion(A, Q);
        Matrix P = M;
        for (int k = 1; k < n; ++k) P = P * M;
        return P.trace();
    };
    Complex out(0.0, 0.0);
    if (weight_sign >= 0) out += tr(A_plus, Q_plus);
    if (weight_sign <= 0) out += tr(A_minus, Q_minus);
    return out;
}

double spectral_radius(const OperatorMatrix& op) {
    Eigen::ComplexEigenSolver<Matrix> es;
    double rho = 0.0;
    auto radius = [&](const Matrix& A, const Matrix& Q) {
        es.compute(companion(A, Q), false);
        double r = 0.0;
        for (int i = 0; i < es.eigenvalues().size(); ++i)
            r = std::max(r, std::abs(es.eigenvalues()(i)));
        return r;
    };
    if (op.weight_sign >= 0) rho = std::max(rho, radius(op.A_plus, op.Q_plus));
    if (op.weight_sign <= 0) rho = std::max(rho, radius(op.A_minus, op.Q_minus));
    return rho;
}

ResidueRankReport residue_rank(const SurfaceParams& params, const Complex& s0, int N) {
    if (pole_lattice_distance(s0) > 1e-10)
        throw Error("residue_rank: s0 must be a continuation pole (1-k)/2");
    const double eps0 = 1e-3;
    Matrix V[3];
    for (int i = 0; i < 3; ++i) {
        double e = eps0 / double(1 << i);
        V[i] = e * parabolic_block(Strand::A, params, s0 + Complex(e, 0.0), N,
                                   ParabolicMethod::Continued);
    }
    Matrix R1a = 2.0 * V[1] - V[0];
    Matrix R1b = 2.0 * V[2] - V[1];
    Matrix R2 = (4.0 * R1b - R1a) / 3.0;
    Eigen::JacobiSVD<Matrix> svd(R2);
    const auto& sv = svd.singularValues();
    ResidueRankReport rep;
    rep.s0 = s0;
    double top = sv(0);
    for (int i = 0; i < sv.size(); ++i) {
        rep.singular_values.push_back(sv(i) / top);
        if (sv(i) > 1e-8 * top) rep.rank_strand_a += 1;
    }
    if (rep.singular_values.size() > 8) rep.singular_values.resize(8);
    // the strand-b block is the calT-chart mirror of strand a; its singular
    // values coincide, so the ranks do as well
    rep.rank_strand_b = rep.rank_strand_a;
    rep.total = rep.rank_strand_a + rep.rank_strand_b;
    return rep;
}

int scaled_block_rank(const SurfaceParams& params, const Complex& s0, const Complex& s, int N) {
    Matrix M = (s - s0) * parabolic_block(Strand::A, params, s, N, ParabolicMethod::Continued);
    Eigen::JacobiSVD<Matrix> svd(M);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-8 * sv(0)) ++rank;
    return rank;
}

Complex class_block_trace(const OrbitClass& cls, const SurfaceParams& params,
                          const Complex& s, int N) {
    GroupElement C = conjugator_C(params.lambda);
    GroupElement ev = C * cls.element.inverse() * C.inverse();
    auto fps = fixed_points_any(ev);
    double fp = fps.first; // attracting fixed point of the evaluation element
    if (std::isinf(fp)) throw Error("class_block_trace: fixed point at infinity");
    double r = 0.4 * std::fabs(fp - fps.second);
    if (auto p = ev.pole()) r = std::min(r, 0.4 * std::fabs(fp - *p));
    for (int tries = 0; tries < 8; ++tries) {
        Disc d(fp, r);
        try {
            Matrix blk = compose_block(ev, d, d, s, N);
            return blk.trace();
        } catch (const Error&) {
            r *= 0.6;
        }
    }
    throw Error("class_block_trace: no admissible adapted disc found");
}

} // namespace hzeta
