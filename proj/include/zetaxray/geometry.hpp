#pragma once

#include "zetaxray/types.hpp"

namespace zx {

/// Axis-aligned region (sigma_min, sigma_max) x (t_min, t_max).
struct Rectangle {
    double sigma_min = 0.0;
    double sigma_max = 1.0;
    double t_min = 0.0;
    double t_max = 1.0;

    Rectangle() = default;
    Rectangle(double s0, double s1, double t0, double t1);

    double width() const { return sigma_max - sigma_min; }
    double height() const { return t_max - t_min; }
    bool contains(ComplexPoint p, double margin = 0.0) const {
        return p.re >= sigma_min - margin && p.re <= sigma_max + margin &&
               p.im >= t_min - margin && p.im <= t_max + margin;
    }
};

}  // namespace zx
