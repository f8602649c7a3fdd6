#include "hzeta/moebius.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hzeta {

GroupElement::GroupElement(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (det == 0.0 || !std::isfinite(det))
        throw Error("GroupElement: singular or non-finite matrix");
    det_sign_ = det > 0 ? 1 : -1;
    double s = std::sqrt(std::fabs(det));
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
    // canonical projective sign
    double lead = a_;
    if (lead == 0.0) lead = b_;
    if (lead == 0.0) lead = c_;
    if (lead == 0.0) lead = d_;
    if (lead < 0.0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

GroupElement GroupElement::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    GroupElement r;
    GroupElement base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Complex GroupElement::apply(const Complex& z) const {
    if (is_inf(z)) {
        if (c_ == 0.0) return cinf();
        return Complex(a_ / c_, 0.0);
    }
    Complex num = a_ * z + b_;
    Complex den = c_ * z + d_;
    if (den == Complex(0.0, 0.0)) return cinf();
    return num / den;
}

double GroupElement::apply_real(double x) const {
    if (std::isinf(x)) return c_ == 0.0 ? std::numeric_limits<double>::infinity() : a_ / c_;
    double den = c_ * x + d_;
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return (a_ * x + b_) / den;
}

bool GroupElement::equals(const GroupElement& o, double tol) const {
    return std::fabs(a_ - o.a_) < tol && std::fabs(b_ - o.b_) < tol &&
           std::fabs(c_ - o.c_) < tol && std::fabs(d_ - o.d_) < tol &&
           det_sign_ == o.det_sign_;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
    return os.str();
}

ElementClass classify(const GroupElement& g) {
    double t = std::fabs(g.trace());
    if (g.det_sign() == -1) {
        // h in the extended group is hyperbolic iff h^2 is; h^2 has trace
        // tr(h)^2 + 2 > 2 unless tr(h) = 0, in which case h^2 = id.
        return t > 1e-12 ? ElementClass::Hyperbolic : ElementClass::Elliptic;
    }
    if (std::fabs(g.a() - 1.0) < 1e-12 && std::fabs(g.d() - 1.0) < 1e-12 &&
        std::fabs(g.b()) < 1e-12 && std::fabs(g.c()) < 1e-12)
        return ElementClass::Identity;
    if (t > 2.0 + 1e-12) return ElementClass::Hyperbolic;
    if (t > 2.0 - 1e-12) return ElementClass::Parabolic;
    return ElementClass::Elliptic;
}

double norm_of(const GroupElement& g) {
    if (classify(g) != ElementClass::Hyperbolic)
        throw NonHyperbolic("norm: element is not hyperbolic: " + g.str());
    double t = std::fabs(g.trace());
    if (g.det_sign() == 1) {
        double mu = (t + std::sqrt(t * t - 4.0)) / 2.0;
        return mu * mu;
    }
    // det -1: N(h) = N(h^2)^(1/2); eigenvalues are mu, -1/mu with
    // mu = (|tr| + sqrt(tr^2 + 4))/2, and N(h) = mu^2.
    double mu = (t + std::sqrt(t * t + 4.0)) / 2.0;
    return mu * mu;
}

std::pair<double, double> fixed_points_any(const GroupElement& g) {
    if (classify(g) != ElementClass::Hyperbolic)
        throw NonHyperbolic("fixed_points: element is not hyperbolic: " + g.str());
    double a = g.a(), b = g.b(), c = g.c(), d = g.d();
    if (c == 0.0) {
        // fixes infinity; the finite fixed point solves (d-a)z = b
        double zf = b / (a - d);
        double deriv_f = 1.0 / (d * d); // |g'(zf)| with |det| = 1
        if (deriv_f < 1.0) return {zf, std::numeric_limits<double>::infinity()};
        return {std::numeric_limits<double>::infinity(), zf};
    }
    double disc = (d - a) * (d - a) + 4.0 * b * c;
    // equals tr^2 - 4 det, positive for hyperbolic elements
    double r = std::sqrt(disc);
    double z1 = (-(d - a) + r) / (2.0 * c);
    double z2 = (-(d - a) - r) / (2.0 * c);
    auto absder = [&](double z) {
        double w = c * z + d;
        return 1.0 / (w * w);
    };
    if (absder(z1) < absder(z2)) return {z1, z2};
    return {z2, z1};
}

std::pair<double, double> fixed_points(const GroupElement& g) {
    if (g.det_sign() != 1)
        throw NonHyperbolic("fixed_points: det sign must be +1");
    return fixed_points_any(g);
}

Complex cocycle_j(const GroupElement& g, const Complex& s, const Complex& z) {
    Complex w = g.c() * z + g.d();
    Complex w2 = w * w;
    if (w2.real() <= 0.0 && std::fabs(w2.imag()) < 1e-300)
        throw BranchCut("cocycle_j: (cz+d)^2 on the closed negative real axis at z=" +
                        std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
    return std::exp(-s * std::log(w2));
}

GroupElement elem_S() { return GroupElement(0, 1, -1, 0); }
GroupElement elem_T(double lambda) { return GroupElement(1, lambda, 0, 1); }
GroupElement elem_J() { return GroupElement(-1, 0, 0, 1); }
GroupElement conjugator_C(double lambda) { return GroupElement(0, 1, -1, lambda / 2.0); }
GroupElement elem_calT(double lambda) {
    return conjugator_C(lambda) * elem_J() * conjugator_C(lambda).inverse();
}
GroupElement elem_g(int j, double lambda) {
    switch (j) {
        case 1: return elem_T(lambda);
        case 2: return elem_T(lambda).inverse() * elem_S();
        case 3: return elem_T(lambda) * elem_S();
        default: throw Error("elem_g: index must be 1, 2 or 3");
    }
}
GroupElement elem_h(int j, double lambda) {
    GroupElement C = conjugator_C(lambda);
    return C * elem_g(j, lambda) * C.inverse();
}

} // namespace hzeta
