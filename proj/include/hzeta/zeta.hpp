#pragma once

#include "hzeta/transferop.hpp"

namespace hzeta {

enum class ZetaMethod { OperatorDet, EulerProduct, TraceSeries };
enum class ZetaWhich { Z, Zplus, Zminus };

struct ZetaValue {
    Complex value;
    double error_estimate = 0.0; // heuristic: last-increment magnitude
    ZetaMethod method = ZetaMethod::OperatorDet;
};

// det(1 - M) of the finite-rank realization, by pivoted complex LU. For the
// companion form [[A, Q], [I, 0]] this equals det(1 - A - Q).
Complex fredholm_det(const OperatorMatrix& op);

// Z (= Z+ Z-), Z+ or Z- as the Fredholm determinant of the assembled
// operators; error estimate from halving the basis size.
ZetaValue zeta_operator(const SurfaceParams& params, const Complex& s, int N,
                        ZetaWhich which, ParabolicMethod method = ParabolicMethod::Auto);

// Euler products over independently enumerated primitive classes: the
// geodesic spectrum (system I) for Z, the billiard spectrum (system IJ) for
// Z+-. Truncated by word-length shells with a contribution cutoff on the
// parabolic families; norm_cap_override trims the spectrum (used by the
// factorization check to match shells across the two systems).
ZetaValue zeta_euler(const SurfaceParams& params, const Complex& s, ZetaWhich which,
                     int max_word_length, int k_max, double norm_cap_override = 0.0,
                     double det_minus_cap = 0.0);

// Orbit-side trace sums sum_{a in P_n} w(a) N(a)^{-s}/(1 - det a N(a)^{-1})
// (or the partition variant sum w(a) N(a)^{-s}), with Hurwitz-zeta tails over
// the parabolic indices.
Complex orbit_trace_sum(const BranchSystem& sys, int n, const Complex& s,
                        bool partition = false);

struct TraceSeriesResult {
    ZetaValue matrix_path; // exp(-sum Tr M^n / n)
    ZetaValue orbit_path;  // same with discretization-free orbit sums
    std::vector<Complex> partition_zn; // Z_n(R, s), n = 1..min(nMax, 8)
};

TraceSeriesResult trace_series(const SurfaceParams& params, const Complex& s, int N,
                               int n_max);

} // namespace hzeta
