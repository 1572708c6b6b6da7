#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"
#include "xray_local.hpp"
#include "zetaxray/gram.hpp"
#include "zetaxray/xray.hpp"

namespace zx {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double derivative_step = 1e-6;
constexpr int max_corrector_steps = 8;

struct Corrected {
    complex z;
    complex value;
    int iterations;
};

std::optional<Corrected> correct(const FunctionOracle& oracle, CurveKind kind, complex q, complex grad, double tol) {
    for (int it = 0; it <= max_corrector_steps; ++it) {
        const auto v = detail::try_eval(oracle, q);
        if (!v) return std::nullopt;
        const double g = detail::component(*v, kind);
        const complex move = g * grad / std::norm(grad);
        // The second test stops at the resolution of t itself, where rounding in f dominates.
        if (std::abs(g) <= tol || std::abs(move) <= 8.0 * eps * std::abs(q)) return Corrected{q, *v, it};
        q -= move;
    }
    return std::nullopt;
}

// t where the segment a-b meets sigma = s.
double height_at(ComplexPoint a, ComplexPoint b, double s) {
    if (a.re == b.re) return a.im;
    return a.im + (s - a.re) / (b.re - a.re) * (b.im - a.im);
}

std::optional<double> first_crossing_height(const std::vector<ComplexPoint>& pts, double s) {
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        if ((pts[k].re - s) * (pts[k + 1].re - s) <= 0.0 && pts[k].re != pts[k + 1].re) {
            return height_at(pts[k], pts[k + 1], s);
        }
    }
    return std::nullopt;
}

}  // namespace

ContinuationResult continue_curve(const FunctionOracle& oracle, CurveKind kind, ComplexPoint start, int direction,
                                  const ContinuationOptions& options,
                                  const std::function<bool(ComplexPoint)>& stop_when) {
    ContinuationResult res;
    const double dir = direction >= 0 ? 1.0 : -1.0;
    complex p = start.value();
    if (const auto pr = detail::project_onto(oracle, kind, start, options.initial_step, options.initial_step)) {
        p = pr->point.value();
    }
    auto vp = detail::try_eval(oracle, p);
    if (!vp) throw DomainError("continuation: start point cannot be evaluated");
    res.points.push_back(ComplexPoint(p));

    double h = options.initial_step;
    while (static_cast<int>(res.points.size()) < options.max_points) {
        const auto df = detail::derivative(oracle, p, derivative_step);
        if (!df || std::abs(*df) == 0.0) throw NumericError("continuation: derivative vanished on the curve");
        const complex tau = dir * detail::component_tangent(*df, kind);
        const complex grad = detail::component_gradient(*df, kind);

        const complex predicted = p + h * tau;
        const auto c = correct(oracle, kind, predicted, grad, 1e-10 * std::abs(*df) * h);
        bool accept = c.has_value();
        if (accept) {
            const complex step = c->z - p;
            const double along = (step.real() * tau.real() + step.imag() * tau.imag()) / std::abs(step);
            accept = std::abs(c->z - predicted) <= 0.5 * h && along > 0.5;
        }
        if (!accept) {
            h *= 0.5;
            if (h < options.min_step) {
                res.stop = ContinuationStop::step_underflow;
                return res;
            }
            continue;
        }

        const double a = detail::other_component(*vp, kind);
        const double b = detail::other_component(c->value, kind);
        if (a != 0.0 && b != 0.0 && std::signbit(a) != std::signbit(b)) {
            const complex guess = p + (a / (a - b)) * (c->z - p);
            const auto z = detail::newton_zero(oracle, guess, h, 2.0 * h);
            res.crossings.push_back(ComplexPoint(z ? *z : guess));
            if (options.stop_at_sign_change) {
                res.points.push_back(ComplexPoint(c->z));
                res.stop = ContinuationStop::sign_change;
                return res;
            }
        }
        p = c->z;
        vp = c->value;
        res.points.push_back(ComplexPoint(p));
        if (!options.region.contains(ComplexPoint(p))) {
            res.stop = ContinuationStop::left_region;
            return res;
        }
        if (stop_when && stop_when(ComplexPoint(p))) {
            res.stop = ContinuationStop::predicate;
            return res;
        }
        if (c->iterations > 4) h *= 0.5;
        if (c->iterations <= 1) h = std::min(2.0 * h, options.max_step);
    }
    res.stop = ContinuationStop::point_limit;
    return res;
}

ParallelTrace trace_parallel(long k, const FunctionOracle& oracle) {
    if (k < 1) throw RangeError("trace_parallel: k must be positive");
    ParallelTrace out;
    out.k = k;
    // Put the start on Im f = 0 by Newton in t alone at sigma = 10.
    double t = static_cast<double>(k) * pi / std::log(2.0);
    for (int it = 0; it < 20; ++it) {
        const auto v = detail::try_eval(oracle, complex(10.0, t));
        const auto df = detail::derivative(oracle, complex(10.0, t), derivative_step);
        if (!v || !df || df->real() == 0.0) throw NumericError("trace_parallel: start projection failed");
        const double step = v->imag() / df->real();  // d Im f / dt = Re f'
        t -= step;
        if (std::abs(step) < 1e-13 * t) break;
    }
    out.t_at_sigma10 = t;
    const ComplexPoint start(10.0, t);
    const auto df = detail::derivative(oracle, start.value(), derivative_step);
    if (!df) throw NumericError("trace_parallel: derivative unavailable");
    const int direction = detail::component_tangent(*df, CurveKind::thick).real() < 0.0 ? 1 : -1;

    ContinuationOptions opt;
    opt.stop_at_sign_change = false;
    opt.region = Rectangle(-1.5, 10.5, t - 60.0, t + 60.0);
    const auto res = continue_curve(oracle, CurveKind::thick, start, direction, opt,
                                    [](ComplexPoint p) { return p.re <= -1.0; });
    if (res.stop != ContinuationStop::predicate) {
        static const char* why[] = {"sign change", "left the region", "step underflow", "point limit", "stop"};
        throw NumericError("trace_parallel: line " + std::to_string(k) + " did not reach sigma = -1 (" +
                           why[static_cast<int>(res.stop)] + " at " + std::to_string(res.points.back().re) + " + " +
                           std::to_string(res.points.back().im) + "i)");
    }
    const auto& pts = res.points;
    out.t_at_minus_one = height_at(pts[pts.size() - 2], pts.back(), -1.0);
    out.t_at_critical = first_crossing_height(pts, 0.5).value_or(0.0);
    if (!res.crossings.empty()) out.zero = res.crossings.front();
    return out;
}

Sheet trace_sheet(long gram_index, const FunctionOracle& oracle, const std::vector<double>* zero_heights,
                  bool with_line_numbers) {
    Sheet sheet;
    sheet.gram_point_index = gram_index;
    sheet.curve.kind = CurveKind::thick;
    const double g = gram_abscissa(gram_index);
    const ComplexPoint start(0.5, g);
    const auto v = detail::try_eval(oracle, start.value());
    if (!v) throw NumericError("trace_sheet: cannot evaluate at the Gram point");
    // Along a sheet f is real and monotone; the zero lies where |f| falls.
    const int toward_zero = v->real() > 0.0 ? -1 : 1;

    ContinuationOptions opt;
    opt.region = Rectangle(-1.5, 10.5, g - 60.0, g + 60.0);
    const auto res = continue_curve(oracle, CurveKind::thick, start, toward_zero, opt,
                                    [](ComplexPoint p) { return p.re > 6.0; });
    sheet.curve.points = res.points;

    std::optional<ParallelTrace> parallel;
    if (res.stop == ContinuationStop::sign_change && !res.crossings.empty()) {
        sheet.zero = res.crossings.front();
    } else if (res.stop == ContinuationStop::predicate) {
        // A zero-free parallel: paired with the parallel immediately above.
        const long k = std::lround(res.points.back().im * std::log(2.0) / pi);
        parallel = trace_parallel(k + 1, oracle);
        sheet.zero = parallel->zero;
        sheet.via_parallel = true;
    }
    sheet.curve.truncated = !sheet.zero.has_value();

    if (sheet.zero) {
        Singularity s;
        s.point = *sheet.zero;
        sheet.curve.attached_singularities.push_back(s);
        if (zero_heights) {
            for (std::size_t i = 0; i < zero_heights->size(); ++i) {
                if (std::abs((*zero_heights)[i] - sheet.zero->im) < 1e-4 && std::abs(sheet.zero->re - 0.5) < 1e-6) {
                    sheet.zero_ordinal = static_cast<long>(i) + 1;
                    break;
                }
            }
        }
    }

    if (with_line_numbers && sheet.zero) {
        ContinuationOptions far = opt;
        far.stop_at_sign_change = false;
        auto left_end = [&](ComplexPoint from, int direction) -> std::optional<long> {
            const auto r = continue_curve(oracle, CurveKind::thick, from, direction, far,
                                          [](ComplexPoint p) { return p.re <= -1.0; });
            if (r.stop != ContinuationStop::predicate) return std::nullopt;
            const double t = height_at(r.points[r.points.size() - 2], r.points.back(), -1.0);
            return t > 5.0 ? std::optional<long>(line_number(t)) : std::nullopt;
        };
        const auto a = left_end(start, -toward_zero);
        std::optional<long> b;
        if (parallel) {
            if (parallel->t_at_minus_one > 5.0) b = line_number(parallel->t_at_minus_one);
        } else {
            b = left_end(*sheet.zero, toward_zero);
        }
        if (a && b) sheet.line_numbers = std::minmax(*a, *b);
    }
    return sheet;
}

std::vector<long> sheet_permutation(int count) {
    if (count < 1) throw RangeError("sheet_permutation: count must be positive");
    const double top = gram_abscissa(count - 2) + 30.0;
    const ZeroScan scan = find_zeros(10.0, top);
    std::vector<double> heights;
    for (const auto& z : scan.zeros) heights.push_back(z.t);
    const FunctionOracle oracle = FunctionOracle::zeta();

    std::vector<long> perm(static_cast<std::size_t>(count), 0);
    detail::parallel_for(count, [&](long i) {
        const Sheet s = trace_sheet(i - 1, oracle, &heights);
        perm[static_cast<std::size_t>(i)] = s.zero_ordinal.value_or(0);
    });
    return perm;
}

}  // namespace zx
