#pragma once

#include <Eigen/Dense>

#include "hzeta/domains.hpp"
#include "hzeta/symbolic.hpp"

namespace hzeta {

using Matrix = Eigen::MatrixXcd;

enum class ParabolicMethod { Direct, Continued, Auto };
enum class Strand { A, B };

// Taylor-section matrix of the weighted composition operator
//   f |-> weight * j_s(h, .) * f(h(.))
// from the source-disc basis u^k, u = (z - c_src)/r_src, to the target-disc
// basis, by sampling 2N equispaced boundary points and a discrete Fourier
// transform. Requires h(cl target) inside source and the pole of h (with its
// branch line) outside the closed target disc.
Matrix compose_block(const GroupElement& h, const Disc& source, const Disc& target,
                     const Complex& s, int N, double weight = 1.0);

// The parabolic sum block sum_{n>=1} tau_s(h1^{-n}) : B(E2) -> B(E1).
// Direct: truncated term-by-term sum (Re s > 1/2) with an integral tail
// correction; Continued: exact Hurwitz-zeta rewrite, valid for all s off the
// continuation poles s = (1-k)/2. Strand B is never materialized; it equals
// the calT-chart mirror of strand A and is realized through the symmetrized
// assembly.
Matrix parabolic_block(Strand strand, const SurfaceParams& params, const Complex& s,
                       int N, ParabolicMethod method, double tol = 1e-12);

// Adapted disc cover used by the production discretization. The paper's discs
// certify nuclearity but contract too shallowly for fast numerics; the cover
// places one disc around each cluster of inverse-branch images.
struct DiscCover {
    std::vector<Disc> discs; // D_h, D_u1, D_m, D_v1, D_t
    int host_h = 0;          // reads through h2^{-1}
    int host_u1 = 1;         // reads through h2^{-1} h1
    int host_m = 2;          // reads through h2^{-1} h1^n (n>=2) and the tail
    int host_v1 = 3;
    int host_t = 4;          // reads through (h2 calT)^{-1}
    double rc = 0.0;         // radius of the small disc at 0 used by the tail
    int n0 = 0;              // first tail index
    double kappa_max = 0.0;  // worst image depth (diagnostic)
    double sing_min = 0.0;   // worst singularity distance in disc units
    int size() const { return int(discs.size()); }
};

DiscCover build_cover(const SurfaceParams& params);

// Finite-rank realization of the weighted transfer operators L^{+-} in the
// companion (linearized) form M = [[A, Q], [I, 0]] over the cover, where A
// collects the finite branches and Q = P o B is the parabolic return block.
// M has the same nonzero spectrum, traces of powers and Fredholm determinant
// as the two-component operator [[A, P], [B, 0]] of the matrix representation.
struct OperatorMatrix {
    double lambda = 0.0;
    Complex s;
    int basis_n = 0;
    ParabolicMethod method = ParabolicMethod::Continued;
    int weight_sign = 0; // +1 / -1; 0 = full (block diagonal over both signs)
    DiscCover cover;

    Matrix A_plus, Q_plus;   // used when weight_sign >= 0
    Matrix A_minus, Q_minus; // used when weight_sign <= 0

    int block_dim() const { return cover.size() * basis_n; }
    int dim() const { return (weight_sign == 0 ? 4 : 2) * block_dim(); }
    Matrix dense() const;
    Complex trace_power(int n) const;
    Complex trace() const { return trace_power(1); }
};

OperatorMatrix assemble_pm(const SurfaceParams& params, const Complex& s, int N, int sign,
                           ParabolicMethod method = ParabolicMethod::Auto);
OperatorMatrix assemble_full(const SurfaceParams& params, const Complex& s, int N,
                             ParabolicMethod method = ParabolicMethod::Auto);

// Largest-modulus eigenvalue of the realization.
double spectral_radius(const OperatorMatrix& op);

struct ResidueRankReport {
    Complex s0;
    int rank_strand_a = 0;
    int rank_strand_b = 0;
    int total = 0;
    std::vector<double> singular_values; // of the strand-a residue, scaled to sv[0]=1
};

// Numerical rank of the residue (s - s0) * parabolic_block(s) at a
// continuation pole s0 = (1-k)/2, Richardson-extrapolated from three epsilons.
ResidueRankReport residue_rank(const SurfaceParams& params, const Complex& s0, int N);

// Numerical rank of (s - s0) * parabolic_block(s) away from poles (generic
// full rank); used as the control experiment for residue_rank.
int scaled_block_rank(const SurfaceParams& params, const Complex& s0, const Complex& s, int N);

// Trace of the one-class composition block tau_s for the conjugacy class of
// cls.element, discretized on a disc adapted to the class (centered at the
// attracting fixed point of the evaluation element). Converges to
// N^{-s}/(1 - det * N^{-1}) superexponentially.
Complex class_block_trace(const OrbitClass& cls, const SurfaceParams& params,
                          const Complex& s, int N);

} // namespace hzeta
