#include "zetaxray/gram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "parallel.hpp"
#include "zetaxray/phase_walk.hpp"
#include "zetaxray/zeta.hpp"

namespace zx {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double bisection_width = 1e-6;
constexpr int max_panels = 64;
constexpr int mismatch_panels = 128;
constexpr int max_fence_extension = 1000;
constexpr long progress_every = 1000;

// Samples of Z across one Gram interval, refined by doubling the panel count.
struct IntervalSamples {
    std::vector<double> t;
    std::vector<double> z;

    int panels() const { return static_cast<int>(t.size()) - 1; }

    void refine() {
        std::vector<double> nt;
        std::vector<double> nz;
        nt.reserve(2 * t.size() - 1);
        nz.reserve(2 * t.size() - 1);
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            nt.push_back(t[i]);
            nz.push_back(z[i]);
            const double mid = 0.5 * (t[i] + t[i + 1]);
            nt.push_back(mid);
            nz.push_back(hardy_z_signed(mid).value.real());
        }
        nt.push_back(t.back());
        nz.push_back(z.back());
        t = std::move(nt);
        z = std::move(nz);
    }

    int sign_changes() const {
        int changes = 0;
        for (std::size_t i = 0; i + 1 < z.size(); ++i) {
            if (std::signbit(z[i]) != std::signbit(z[i + 1])) ++changes;
        }
        return changes;
    }
};

ZeroRecord bisect(double lo, double z_lo, double hi) {
    while (hi - lo > bisection_width) {
        const double mid = 0.5 * (lo + hi);
        const double z_mid = hardy_z_signed(mid).value.real();
        if (std::signbit(z_mid) == std::signbit(z_lo)) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    ZeroRecord r;
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.t = 0.5 * (lo + hi);
    r.refinement_width = hi - lo;
    return r;
}

struct IntervalResult {
    GramIntervalCensus census;
    std::vector<ZeroRecord> zeros;
};

IntervalResult scan_interval(long n, double a, double za, double b, double zb, int min_panels) {
    IntervalSamples s{{a, b}, {za, zb}};
    while (s.panels() < min_panels) s.refine();
    while (s.sign_changes() == 0 && s.panels() < max_panels) s.refine();

    IntervalResult out;
    out.census.index = n;
    out.census.panels = s.panels();
    for (std::size_t i = 0; i + 1 < s.z.size(); ++i) {
        if (std::signbit(s.z[i]) != std::signbit(s.z[i + 1])) {
            out.zeros.push_back(bisect(s.t[i], s.z[i], s.t[i + 1]));
        }
    }
    out.census.zero_count = static_cast<int>(out.zeros.size());
    return out;
}

template <class Body>
void for_each_index(long count, bool parallel, Body&& body) {
    if (parallel) {
        detail::parallel_for(count, body);
    } else {
        for (long i = 0; i < count; ++i) body(i);
    }
}

std::vector<IntervalResult> scan_all(const std::vector<double>& fences, const std::vector<double>& z,
                                     long n_lo, int min_panels, bool parallel, const ProgressFn& progress) {
    const long count = static_cast<long>(fences.size()) - 1;
    std::vector<IntervalResult> results(static_cast<std::size_t>(count));
    std::atomic<long> done{0};
    for_each_index(count, parallel, [&](long i) {
        const auto k = static_cast<std::size_t>(i);
        results[k] = scan_interval(n_lo + i, fences[k], z[k], fences[k + 1], z[k + 1], min_panels);
        const long d = ++done;
        if (progress && (d % progress_every == 0 || d == count)) {
#pragma omp critical(zx_progress)
            progress(d, count);
        }
    });
    return results;
}

double walk_target_intermediate() { return 1e-8; }

}  // namespace

double gram_residual_tolerance(long n) {
    return std::max(1e-9, 16.0 * eps * std::abs(static_cast<double>(n) * pi));
}

double gram_abscissa(long n) {
    if (n < -1) throw RangeError("gram_point: index must be >= -1");
    // Invert theta ~ pi x log x - pi x - pi/8 (x = t / 2 pi) by two
    // fixed-point steps of x = (n + 1/8 + x) / log x.
    const double target = static_cast<double>(n) * pi;
    double x = std::max(std::exp(1.0), static_cast<double>(n) + 1.0);
    for (int i = 0; i < 2; ++i) x = (static_cast<double>(n) + 0.125 + x) / std::log(x);
    double t = 2.0 * pi * x;
    // theta decreases below t = 2 pi; stay on the increasing branch.
    const double floor_t = 2.0 * pi * 1.05;
    const double tol = gram_residual_tolerance(n);
    for (int iter = 0; iter < 50; ++iter) {
        const double r = theta(t) - target;
        if (std::abs(r) <= 0.25 * tol) return t;
        const double dt = r / theta_derivative(t);
        t = std::max(floor_t, t - dt);
        if (std::abs(dt) < 4.0 * eps * t) {
            if (std::abs(theta(t) - target) <= tol) return t;
        }
    }
    if (std::abs(theta(t) - target) <= tol) return t;
    throw NumericError("gram_point: Newton did not converge for n = " + std::to_string(n));
}

GramPoint gram_point(long n) {
    GramPoint g;
    g.index = n;
    g.t = gram_abscissa(n);
    g.residual = theta(g.t) - static_cast<double>(n) * pi;
    g.z_value = hardy_z_signed(g.t).value.real();
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    g.quality = (parity * g.z_value > 0.0) ? GramQuality::good : GramQuality::bad;
    return g;
}

long gram_index_below(double t) {
    long n = static_cast<long>(std::floor(theta(t) / pi));
    n = std::max(n, -1L);
    while (gram_abscissa(n + 1) <= t) ++n;
    while (n > -1 && gram_abscissa(n) > t) --n;
    return n;
}

SReport s_walk_unchecked(double t) {
    if (!(t > 0.0)) throw DomainError("S(T): requires T > 0");
    constexpr double sigma_start = 10.0;
    const double target = walk_target_intermediate();
    auto f = [&](double sigma) {
        if (sigma == 0.5) return zeta(ComplexPoint(0.5, t), 1e-10).value;
        return zeta(ComplexPoint(sigma, t), target).value;
    };
    PhaseWalkOptions opt;
    opt.initial_step = 0.5;
    opt.min_step = 1e-9;
    const PhaseWalk walk = walk_phase(f, sigma_start, 0.5, opt);

    SReport r;
    r.t = t;
    // |zeta(10 + iT) - 1| < 1e-3, so the principal argument is the branch
    // continued from +infinity.
    r.s_walk = (std::arg(walk.start_value) + walk.change) / pi;
    const double th = theta(t) / pi;
    r.n_of_t = std::lround(th + 1.0 + r.s_walk);
    r.s_value = static_cast<double>(r.n_of_t) - th - 1.0;
    r.evaluations = walk.evaluations;
    return r;
}

SReport s_of_t(double t) {
    if (!(t >= 10.0)) throw RangeError("S(T): requires T >= 10");
    return s_walk_unchecked(t);
}

long count_N(double t) {
    if (!(t >= 10.0)) throw RangeError("count_N: requires T >= 10");
    const double below = hardy_z_signed(t - 1e-6).value.real();
    const double above = hardy_z_signed(t + 1e-6).value.real();
    if (std::signbit(below) != std::signbit(above)) {
        throw DomainError("count_N: T is within 1e-6 of a zero; perturb T");
    }
    return s_walk_unchecked(t).n_of_t;
}

namespace {

ZeroScan scan_range(long n_lo, long n_hi, bool parallel, const ProgressFn& progress) {
    if (n_lo < -1 || n_hi <= n_lo) throw RangeError("scan: requires -1 <= n_lo < n_hi");
    const long count = n_hi - n_lo;
    std::vector<double> fences(static_cast<std::size_t>(count + 1));
    std::vector<double> z(fences.size());
    for_each_index(count + 1, parallel, [&](long i) {
        const auto k = static_cast<std::size_t>(i);
        fences[k] = gram_abscissa(n_lo + i);
        z[k] = hardy_z_signed(fences[k]).value.real();
    });

    ZeroScan scan;
    scan.first_gram = n_lo;
    scan.last_gram = n_hi;
    scan.count_at_first = s_walk_unchecked(fences.front()).n_of_t;
    scan.count_at_last = s_walk_unchecked(fences.back()).n_of_t;
    const long expected = scan.count_at_last - scan.count_at_first;

    auto results = scan_all(fences, z, n_lo, 1, parallel, progress);
    auto found = [&] {
        long total = 0;
        for (const auto& r : results) total += r.census.zero_count;
        return total;
    };
    if (found() != expected) {
        scan.warnings.push_back("census " + std::to_string(found()) + " != N(T) difference " +
                                std::to_string(expected) + "; rescanning at 128 panels");
        results = scan_all(fences, z, n_lo, mismatch_panels, parallel, {});
    }
    if (found() != expected) {
        scan.complete = false;
        scan.warnings.push_back("incomplete: found " + std::to_string(found()) + " zeros, N(T) predicts " +
                                std::to_string(expected) +
                                " (possible close pair or zero off the critical line)");
    }

    long ordinal = scan.count_at_first;
    for (auto& r : results) {
        scan.intervals.push_back(r.census);
        for (auto& zr : r.zeros) {
            zr.ordinal = ++ordinal;
            scan.zeros.push_back(zr);
        }
    }
    return scan;
}

}  // namespace

ZeroScan scan_gram_range(long n_lo, long n_hi, const ProgressFn& progress) {
    return scan_range(n_lo, n_hi, true, progress);
}

ZeroScan scan_gram_range_serial(long n_lo, long n_hi) { return scan_range(n_lo, n_hi, false, {}); }

ZeroScan find_zeros(double t_lo, double t_hi) {
    if (!(t_lo >= 10.0) || !(t_hi > t_lo)) throw RangeError("find_zeros: requires 10 <= t_lo < t_hi");
    const long n_lo = gram_index_below(t_lo);
    const long n_hi = gram_index_below(t_hi) + 1;
    ZeroScan scan = scan_gram_range(n_lo, n_hi);
    std::erase_if(scan.zeros, [&](const ZeroRecord& z) { return z.t < t_lo || z.t > t_hi; });
    return scan;
}

GramClassification classify_gram_range(long n_lo, long n_hi, const ProgressFn& progress) {
    if (n_lo < -1 || n_hi <= n_lo) throw RangeError("classify: requires -1 <= n_lo < n_hi");
    GramClassification out;
    std::vector<GramPoint> points(static_cast<std::size_t>(n_hi - n_lo + 1));
    detail::parallel_for(n_hi - n_lo + 1,
                         [&](long i) { points[static_cast<std::size_t>(i)] = gram_point(n_lo + i); });

    for (int i = 0; i < max_fence_extension && points.front().quality == GramQuality::bad &&
                    points.front().index > -1;
         ++i) {
        points.insert(points.begin(), gram_point(points.front().index - 1));
    }
    for (int i = 0; i < max_fence_extension && points.back().quality == GramQuality::bad; ++i) {
        points.push_back(gram_point(points.back().index + 1));
    }
    out.scan = scan_gram_range(points.front().index, points.back().index, progress);

    std::optional<std::size_t> last_good;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].quality != GramQuality::good) continue;
        if (last_good && i - *last_good > 1) {
            GramBlock b;
            b.start_index = points[*last_good].index;
            b.end_index = points[i].index;
            b.interval_count = b.end_index - b.start_index;
            for (const auto& c : out.scan.intervals) {
                if (c.index >= b.start_index && c.index < b.end_index) b.zero_count += c.zero_count;
            }
            out.blocks.push_back(b);
        }
        last_good = i;
    }
    out.points = std::move(points);
    return out;
}

AuditReport audit_laws(long n_lo, long n_hi, const ProgressFn& progress) {
    AuditReport report;
    report.classification = classify_gram_range(n_lo, n_hi, progress);
    const auto& intervals = report.classification.scan.intervals;

    auto nearest = [&](long index, auto predicate) -> std::optional<long> {
        std::optional<long> best;
        for (const auto& c : intervals) {
            if (!predicate(c)) continue;
            if (!best || std::abs(c.index - index) < std::abs(*best - index)) best = c.index;
        }
        return best;
    };

    for (const auto& c : intervals) {
        if (c.index < n_lo || c.index >= n_hi || c.zero_count == 1) continue;
        GramLawViolation v;
        v.index = c.index;
        v.zero_count = c.zero_count;
        if (c.zero_count < 1) {
            v.compensated_by = nearest(c.index, [](const GramIntervalCensus& o) { return o.zero_count > 1; });
        } else {
            v.compensated_by = nearest(c.index, [](const GramIntervalCensus& o) { return o.zero_count < 1; });
        }
        report.gram_law.push_back(v);
    }
    for (const auto& b : report.classification.blocks) {
        if (b.zero_count == b.interval_count) continue;
        RosserViolation v;
        v.block = b;
        const bool deficit = b.zero_count < b.interval_count;
        v.compensated_by = nearest(b.start_index, [&](const GramIntervalCensus& o) {
            const bool outside = o.index < b.start_index || o.index >= b.end_index;
            return outside && (deficit ? o.zero_count > 1 : o.zero_count < 1);
        });
        report.rosser.push_back(v);
    }
    return report;
}

SExtremes s_extremes(const ZeroScan& scan) {
    const double t0 = gram_abscissa(scan.first_gram);
    const double t1 = gram_abscissa(scan.last_gram);
    const double theta0 = theta(t0);
    long n = scan.count_at_first;
    auto s_at = [&](double t, long count) { return static_cast<double>(count) - theta(t) / pi - 1.0; };
    (void)theta0;

    SExtremes e;
    e.min_s = e.max_s = s_at(t0, n);
    e.t_at_min = e.t_at_max = t0;
    auto consider = [&](double t, double s) {
        if (s < e.min_s) {
            e.min_s = s;
            e.t_at_min = t;
        }
        if (s > e.max_s) {
            e.max_s = s;
            e.t_at_max = t;
        }
    };
    for (const auto& z : scan.zeros) {
        consider(z.t, s_at(z.t, n));  // left limit
        ++n;
        consider(z.t, s_at(z.t, n));  // right limit
    }
    consider(t1, s_at(t1, n));
    return e;
}

ZExtremum z_extremum(double a, double b, bool use_euler_maclaurin) {
    if (!(b > a)) throw RangeError("z_extremum: requires a < b");
    auto z = [&](double t) {
        return use_euler_maclaurin ? hardy_z_euler_maclaurin(t, 1e-12).value.real()
                                   : riemann_siegel_z(t).eval.value.real();
    };
    const double sign = z(0.5 * (a + b)) >= 0.0 ? 1.0 : -1.0;
    const auto [t, v] = boost::math::tools::brent_find_minima([&](double x) { return -sign * z(x); }, a, b, 40);
    return {t, -sign * v, use_euler_maclaurin ? Method::euler_maclaurin : Method::riemann_siegel};
}

double line_number_value(double t) {
    if (!(t > 5.0)) throw RangeError("line_number: requires t > 5");
    return 2.0 * t / pi * std::log(t / (2.0 * pi)) - 2.0 * t / pi + 0.5;
}

long line_number(double t) { return std::lround(line_number_value(t)); }

long zeros_below_parallel(double t, bool zero_carrying) {
    if (!(t > 5.0)) throw RangeError("zeros_below_parallel: requires T > 5");
    const double x = t / (2.0 * pi);
    return std::lround(x * std::log(x) - x + (zero_carrying ? 11.0 / 8.0 : 7.0 / 8.0));
}

}  // namespace zx
