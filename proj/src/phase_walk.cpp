#include "zetaxray/phase_walk.hpp"

#include <algorithm>
#include <string>

namespace zx {

PhaseWalk walk_phase(const std::function<complex(double)>& f, double u0, double u1,
                     const PhaseWalkOptions& options) {
    PhaseWalk walk;
    const double direction = (u1 >= u0) ? 1.0 : -1.0;
    const double length = std::abs(u1 - u0);
    double h = std::min(options.initial_step, length);
    double done = 0.0;
    complex current = f(u0);
    ++walk.evaluations;
    if (current == complex{0.0, 0.0}) throw NumericError("phase walk: function vanishes at start");
    walk.start_value = current;
    int calm = 0;
    while (done < length) {
        const double step = std::min(h, length - done);
        const double u = (step == length - done) ? u1 : u0 + direction * (done + step);
        const complex next = f(u);
        ++walk.evaluations;
        if (next == complex{0.0, 0.0}) {
            throw NumericError("phase walk: function vanishes on the path");
        }
        const double jump = std::arg(next / current);
        if (std::abs(jump) > options.max_jump) {
            h = step / 2.0;
            calm = 0;
            if (h < options.min_step) {
                throw NumericError("phase walk: step underflow near u = " + std::to_string(u) +
                                   " (path passes near a zero or pole)");
            }
            continue;
        }
        walk.change += jump;
        current = next;
        done += step;
        if (std::abs(jump) < options.max_jump / 2.0 && ++calm >= 2) {
            h = std::min(options.initial_step, 2.0 * h);
            calm = 0;
        }
    }
    walk.end_value = current;
    return walk;
}

Winding winding_number(const std::function<complex(complex)>& f, const std::vector<complex>& vertices,
                       double relative_step) {
    Winding w;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const complex a = vertices[i];
        const complex b = vertices[(i + 1) % vertices.size()];
        PhaseWalkOptions opt;
        opt.initial_step = relative_step;
        opt.min_step = 1e-12;
        const PhaseWalk leg = walk_phase([&](double u) { return f(a + u * (b - a)); }, 0.0, 1.0, opt);
        w.change += leg.change;
        w.evaluations += leg.evaluations;
    }
    w.winding = static_cast<int>(std::lround(w.change / (2.0 * pi)));
    return w;
}

}  // namespace zx
