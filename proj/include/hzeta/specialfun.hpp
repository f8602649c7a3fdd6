#pragma once

#include "hzeta/moebius.hpp"

namespace hzeta {

// Tuning knobs for the Euler-Maclaurin evaluation of the Hurwitz zeta.
struct HurwitzParams {
    int shift_terms = 16;     // direct-sum head length M (auto-increased)
    int bernoulli_terms = 12; // correction depth J, 1..15
};

// zeta_H(w, q) = sum_{n>=0} (n+q)^{-w} continued via Euler-Maclaurin.
// Requires Re q > 0 and w != 1. Relative error target 1e-13 for |w| <= 60.
Complex hurwitz_zeta(const Complex& w, const Complex& q,
                     const HurwitzParams& params = {});

} // namespace hzeta
