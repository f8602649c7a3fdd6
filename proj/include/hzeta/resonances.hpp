#pragma once

#include "hzeta/zeta.hpp"

namespace hzeta {

struct DeltaResult {
    double delta = 0.0;
    double lambda_max_residual = 0.0; // |lambda_max(L_delta) - 1|
    double z_abs = 0.0;               // |Z(delta)|
};

// Leading real zero of Z: the unique s in (1/2, 1) with lambda_max(L_s) = 1.
DeltaResult find_delta(const SurfaceParams& params, int N, double tol);

struct Box {
    double re_lo, re_hi, im_lo, im_hi;
    double width() const { return re_hi - re_lo; }
    double height() const { return im_hi - im_lo; }
};

struct GridPoint {
    double re, im;
    Complex z;
    int flag; // 0 ok, 1 pole guard, 2 evaluation error
};

struct GridResult {
    Box region;
    double step;
    int N;
    double lambda;
    int n_re = 0, n_im = 0;
    std::vector<GridPoint> points; // im outer ascending, re inner ascending
};

GridResult scan_grid(const SurfaceParams& params, const Box& region, double step, int N,
                     int threads = 0);

struct Zero {
    Complex s;
    double residual;
};

// Argument-principle count and Newton refinement of the zeros of Z in a box.
std::vector<Zero> locate_zeros(const SurfaceParams& params, const Box& box, int N);

// Winding number of Z along the box boundary (exposed for counting checks).
int winding_number(const SurfaceParams& params, const Box& box, int N);

struct ResonanceReport {
    double delta;
    std::vector<Zero> zeros;
    Box region;
    double step;
    int N;
    double lambda;
};

} // namespace hzeta
