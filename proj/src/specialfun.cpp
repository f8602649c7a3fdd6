#include "hzeta/specialfun.hpp"

#include <array>
#include <cmath>

namespace hzeta {

namespace {

// B_2, B_4, ..., B_30 as exact rationals rendered to binary64.
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

constexpr std::array<double, 16> kFactorialEven = {
    1.0,                     // 0!
    2.0,                     // 2!
    24.0,                    // 4!
    720.0,                   // 6!
    40320.0,                 // 8!
    3628800.0,               // 10!
    479001600.0,             // 12!
    87178291200.0,           // 14!
    20922789888000.0,        // 16!
    6402373705728000.0,      // 18!
    2432902008176640000.0,   // 20!
    1.1240007277776077e+21,  // 22!
    6.204484017332394e+23,   // 24!
    4.0329146112660565e+26,  // 26!
    3.0488834461171384e+29,  // 28!
    2.6525285981219103e+32,  // 30!
};

} // namespace

Complex hurwitz_zeta(const Complex& w, const Complex& q, const HurwitzParams& params) {
    if (std::abs(w - 1.0) < 1e-12)
        throw PoleAtOne("hurwitz_zeta: w = 1 is the pole of zeta_H");
    if (!(q.real() > 0.0))
        throw BadDomain("hurwitz_zeta: Re q must be positive, got " + std::to_string(q.real()));
    int M = params.shift_terms < 8 ? 8 : params.shift_terms;
    int J = params.bernoulli_terms;
    if (J < 1) J = 1;
    if (J > 15) J = 15;

    while (std::abs(Complex(M, 0) + q) < std::abs(w) + 10.0) M *= 2;

    Complex total(0.0, 0.0);
    for (int n = 0; n < M; ++n) total += std::exp(-w * std::log(double(n) + q));

    Complex a = double(M) + q;
    Complex la = std::log(a);
    total += std::exp((1.0 - w) * la) / (w - 1.0);
    total += 0.5 * std::exp(-w * la);

    // sum_{j=1..J} B_{2j}/(2j)! (w)_{2j-1} a^{-w-2j+1}
    Complex rising(1.0, 0.0); // (w)_{2j-1} built incrementally
    for (int j = 1; j <= J; ++j) {
        if (j == 1)
            rising = w;
        else
            rising *= (w + double(2 * j - 3)) * (w + double(2 * j - 2));
        total += kBernoulli[j - 1] / kFactorialEven[j] * rising *
                 std::exp((-w - double(2 * j - 1)) * la);
    }
    return total;
}

} // namespace hzeta
