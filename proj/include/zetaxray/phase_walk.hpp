#pragma once

#include <functional>
#include <vector>

#include "zetaxray/types.hpp"

namespace zx {

/// Continuous tracking of arg f(u) along a parameterised path u in [u0, u1].
/// A step is halved whenever the argument jumps by more than max_jump
/// between consecutive samples; after two calm steps it doubles again, up to
/// the initial step.
struct PhaseWalkOptions {
    double initial_step = 0.25;
    double max_jump = pi / 4.0;
    double min_step = 1e-9;
};

struct PhaseWalk {
    double change = 0.0;  // accumulated argument variation
    complex start_value;
    complex end_value;
    int evaluations = 0;
};

/// Throws NumericError when the step underflows min_step (the path passes
/// too close to a zero or pole) or when f vanishes on the path.
PhaseWalk walk_phase(const std::function<complex(double)>& f, double u0, double u1,
                     const PhaseWalkOptions& options = {});

/// Winding number of f around the closed polygon through `vertices`
/// (counter-clockwise order gives zeros minus poles inside).
struct Winding {
    int winding = 0;
    double change = 0.0;
    int evaluations = 0;
};

Winding winding_number(const std::function<complex(complex)>& f, const std::vector<complex>& vertices,
                       double relative_step = 0.05);

}  // namespace zx
