#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "hzeta/errors.hpp"

namespace hzeta {

using Complex = std::complex<double>;

// The point at infinity on P^1(R) resp. the Riemann sphere is represented by
// an infinite real part; inf() below is the canonical value.
inline Complex cinf() { return Complex(std::numeric_limits<double>::infinity(), 0.0); }
inline bool is_inf(const Complex& z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

enum class ElementClass { Identity, Elliptic, Parabolic, Hyperbolic };

// Surface parameter: the Hecke triangle surfaces of infinite area have lambda > 2.
struct SurfaceParams {
    double lambda;
    explicit SurfaceParams(double lam) : lambda(lam) {
        if (!(lam > 2.0))
            throw InvalidLambda("lambda must exceed 2, got " + std::to_string(lam));
    }
};

// A projective 2x2 real matrix with |det| = 1. Entries are normalized at
// construction (divide by sqrt|det|) and the sign is canonicalized so that the
// first nonzero entry of (a,b,c,d) is positive.
class GroupElement {
  public:
    GroupElement() : a_(1), b_(0), c_(0), d_(1), det_sign_(1) {}
    GroupElement(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    int det_sign() const { return det_sign_; }
    double trace() const { return a_ + d_; }

    GroupElement operator*(const GroupElement& o) const {
        return GroupElement(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                            c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    }
    GroupElement inverse() const {
        // |det| = 1, so the adjugate is the inverse up to det sign.
        return GroupElement(d_, -b_, -c_, a_);
    }
    GroupElement pow(int n) const;

    // Fractional linear action on the Riemann sphere; the pole maps to inf.
    Complex apply(const Complex& z) const;
    double apply_real(double x) const;

    // Pole of the action (point sent to infinity); nullopt if c == 0.
    std::optional<double> pole() const {
        if (c_ == 0.0) return std::nullopt;
        return -d_ / c_;
    }
    // Derivative of the action at a finite point: det / (cz+d)^2.
    Complex derivative(const Complex& z) const {
        Complex w = c_ * z + d_;
        return double(det_sign_) / (w * w);
    }

    bool equals(const GroupElement& o, double tol = 1e-9) const;

    std::string str() const;

  private:
    double a_, b_, c_, d_;
    int det_sign_;
};

ElementClass classify(const GroupElement& g);

// Norm N(g) of a hyperbolic element: square of the larger eigenvalue for
// det +1; N(g^2)^(1/2) for det -1. log N is the geodesic/billiard length.
double norm_of(const GroupElement& g);

// Attracting and repelling fixed point of a hyperbolic element of det +1.
std::pair<double, double> fixed_points(const GroupElement& g);

// Same, but accepts det -1 hyperbolic elements (used by the orbit machinery;
// the fixed points of g and g^{-1} coincide).
std::pair<double, double> fixed_points_any(const GroupElement& g);

// j_s(g, z) = ((cz+d)^2)^{-s} with the principal branch of the log of the
// squared linear factor. |det g| = 1 by normalization. Throws BranchCut when
// (cz+d)^2 lies on the closed negative real axis.
Complex cocycle_j(const GroupElement& g, const Complex& s, const Complex& z);

// Named constants of the construction.
GroupElement elem_S();
GroupElement elem_T(double lambda);
GroupElement elem_J();
GroupElement conjugator_C(double lambda);      // moves the cusp to a finite point
GroupElement elem_calT(double lambda);         // C J C^{-1}, an involution
GroupElement elem_g(int j, double lambda);     // g1 = T, g2 = T^{-1}S, g3 = TS
GroupElement elem_h(int j, double lambda);     // h_j = C g_j C^{-1}

} // namespace hzeta
