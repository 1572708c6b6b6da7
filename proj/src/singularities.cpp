#include <algorithm>
#include <cmath>
#include <map>

#include "xray_local.hpp"
#include "zetaxray/phase_walk.hpp"
#include "zetaxray/xray.hpp"

namespace zx {
namespace {

std::vector<complex> circle(complex centre, double r, int n) {
    std::vector<complex> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v.push_back(centre + std::polar(r, 2.0 * pi * k / n));
    return v;
}

std::optional<int> winding_of(const std::function<complex(complex)>& g, const std::vector<complex>& polygon) {
    try {
        return winding_number(g, polygon).winding;
    } catch (const NumericError&) {
        return std::nullopt;
    } catch (const DomainError&) {
        return std::nullopt;
    } catch (const RangeError&) {
        return std::nullopt;
    }
}

bool near_any(const std::vector<Singularity>& list, complex z, double r) {
    return std::any_of(list.begin(), list.end(), [&](const Singularity& s) { return std::abs(s.point.value() - z) < r; });
}

struct CellRef {
    int i;
    int j;
    friend bool operator<(const CellRef& a, const CellRef& b) { return a.j != b.j ? a.j < b.j : a.i < b.i; }
};

complex cell_centre(const SignFields& f, int i, int j) {
    const ComplexPoint p = f.node(i, j);
    return {p.re + 0.5 * f.dx, p.im + 0.5 * f.dy};
}

std::vector<CellRef> zero_candidates(const SignFields& f) {
    std::vector<CellRef> out;
    for (int j = 0; j < f.grid.ny; ++j) {
        for (int i = 0; i < f.grid.nx; ++i) {
            const int ci[4] = {i, i + 1, i + 1, i};
            const int cj[4] = {j, j, j + 1, j + 1};
            bool valid = true;
            bool nudged = false;
            int re = 0;
            int im = 0;
            for (int k = 0; k < 4; ++k) {
                valid = valid && f.valid(ci[k], cj[k]);
                nudged = nudged || (f.flags[f.index(ci[k], cj[k])] & SignFields::nudged);
                re += f.sign_re(ci[k], cj[k]);
                im += f.sign_im(ci[k], cj[k]);
            }
            if (!valid) continue;
            if (nudged || (re % 4 != 0 && im % 4 != 0)) out.push_back({i, j});
        }
    }
    return out;
}

// Cells where the central-difference derivative field changes sign in both
// components: candidates for zeros of f'.
std::vector<CellRef> saddle_candidates(const SignFields& f, const XRay& x) {
    const int nx = f.grid.nx;
    const int ny = f.grid.ny;
    std::vector<complex> g(f.values.size(), complex(0.0, 0.0));
    std::vector<char> ok(f.values.size(), 0);
    for (int j = 0; j <= ny; ++j) {
        for (int i = 1; i < nx; ++i) {
            if (!f.valid(i - 1, j) || !f.valid(i + 1, j)) continue;
            g[f.index(i, j)] = (f.value(i + 1, j) - f.value(i - 1, j)) / (2.0 * f.dx);
            ok[f.index(i, j)] = 1;
        }
    }
    std::vector<CellRef> out;
    for (int j = 0; j < ny; ++j) {
        for (int i = 1; i + 1 < nx; ++i) {
            const std::size_t k[4] = {f.index(i, j), f.index(i + 1, j), f.index(i + 1, j + 1), f.index(i, j + 1)};
            int re = 0;
            int im = 0;
            bool valid = true;
            for (std::size_t q : k) {
                valid = valid && ok[q];
                re += !std::signbit(g[q].real());
                im += !std::signbit(g[q].imag());
            }
            if (valid && re % 4 != 0 && im % 4 != 0) out.push_back({i, j});
        }
    }
    for (const auto& c : x.unresolved_cells) out.push_back({c.i, c.j});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](const CellRef& a, const CellRef& b) { return !(a < b) && !(b < a); }),
              out.end());
    return out;
}

std::optional<complex> newton_saddle(const FunctionOracle& oracle, complex z0, double rho, double max_move) {
    complex z = z0;
    for (int it = 0; it < 40; ++it) {
        const auto d = detail::cauchy_derivatives(oracle, z, rho);
        if (!d || std::abs(d->d2) == 0.0) return std::nullopt;
        const complex step = d->d1 / d->d2;
        z -= step;
        if (std::abs(z - z0) > max_move || !std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
        if (std::abs(step) < 1e-11 * std::max(1.0, std::abs(z))) return z;
    }
    return std::nullopt;
}

// Real-symmetric functions: points found a rounding error off the real axis
// belong on it.
complex snap(const FunctionOracle& oracle, complex z, double cell) {
    if (oracle.real_on_real_axis() && std::abs(z.imag()) < 1e-9 * cell) return {z.real(), 0.0};
    return z;
}

void dedupe(std::vector<Singularity>& list, double r) {
    std::vector<Singularity> out;
    for (const auto& s : list) {
        if (!near_any(out, s.point.value(), r)) out.push_back(s);
    }
    list = std::move(out);
}

}  // namespace

void detect_singularities(XRay& x, const SignFields& f, const FunctionOracle& oracle) {
    const double cell = std::min(f.dx, f.dy);
    const double diag = std::hypot(f.dx, f.dy);
    const auto fn = [&](complex z) { return oracle(z); };

    std::vector<Singularity> poles;
    for (const ComplexPoint& p : oracle.poles_in(f.rect)) {
        Singularity s;
        s.point = p;
        s.type = SingularityType::pole;
        const auto w = winding_of(fn, circle(p.value(), 0.25 * cell, 32));
        s.multiplicity = w ? -*w : 1;
        poles.push_back(s);
    }

    // Zeros: Newton from every cell where both sign fields change.
    const auto cand = zero_candidates(f);
    std::vector<std::optional<complex>> found(cand.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < cand.size(); ++c) {
        found[c] = detail::newton_zero(oracle, cell_centre(f, cand[c].i, cand[c].j), diag, 1.5 * diag);
    }
    std::vector<Singularity> zeros;
    for (std::size_t c = 0; c < cand.size(); ++c) {
        if (found[c]) {
            const complex z = snap(oracle, *found[c], cell);
            if (!f.rect.contains(ComplexPoint(z))) continue;
            Singularity s;
            s.point = ComplexPoint(z);
            zeros.push_back(s);
            continue;
        }
        // No convergence: keep the cell only if f winds around it.
        const complex lo = cell_centre(f, cand[c].i, cand[c].j) - complex(f.dx, f.dy);
        const std::vector<complex> square = {lo, lo + 2.0 * f.dx, lo + complex(2.0 * f.dx, 2.0 * f.dy),
                                             lo + complex(0.0, 2.0 * f.dy)};
        const auto w = winding_of(fn, square);
        if (w && *w > 0 && !near_any(poles, cell_centre(f, cand[c].i, cand[c].j), 2.0 * diag)) {
            Singularity s;
            s.point = ComplexPoint(cell_centre(f, cand[c].i, cand[c].j));
            s.refined = false;
            s.multiplicity = *w;
            zeros.push_back(s);
            x.diagnostics.push_back("zero near (" + std::to_string(s.point.re) + ", " + std::to_string(s.point.im) +
                                    ") kept at grid accuracy");
        }
    }
    dedupe(zeros, 0.5 * cell);
    std::erase_if(zeros, [&](const Singularity& s) { return near_any(poles, s.point.value(), 0.5 * cell); });
    for (auto& s : zeros) {
        if (!s.refined) continue;
        const auto w = winding_of(fn, circle(s.point.value(), 0.25 * cell, 32));
        s.multiplicity = w ? *w : 1;
    }
    std::erase_if(zeros, [](const Singularity& s) { return s.multiplicity <= 0; });

    // Saddles: Newton on f' = 0 with Cauchy-integral derivatives.
    const auto scand = saddle_candidates(f, x);
    std::vector<std::optional<complex>> sfound(scand.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < scand.size(); ++c) {
        const complex z0 = cell_centre(f, scand[c].i, scand[c].j);
        if (near_any(poles, z0, 3.0 * diag)) continue;
        sfound[c] = newton_saddle(oracle, z0, 0.25 * cell, 2.0 * diag);
    }
    std::vector<Singularity> saddles;
    for (std::size_t c = 0; c < scand.size(); ++c) {
        if (!sfound[c] || !f.rect.contains(ComplexPoint(*sfound[c]))) continue;
        if (near_any(zeros, *sfound[c], 0.5 * cell)) continue;  // multiple zero, already counted
        Singularity s;
        s.point = ComplexPoint(snap(oracle, *sfound[c], cell));
        s.type = SingularityType::saddle;
        saddles.push_back(s);
    }
    dedupe(saddles, 0.5 * cell);
    for (auto& s : saddles) {
        const double h = 1e-5 * diag;
        const auto w = winding_of(
            [&](complex z) {
                const auto d = detail::derivative(oracle, z, h);
                if (!d) throw DomainError("derivative unavailable");
                return *d;
            },
            circle(s.point.value(), 0.25 * cell, 32));
        s.multiplicity = w ? std::max(1, *w) : 1;
    }

    auto by_position = [](const Singularity& a, const Singularity& b) {
        return a.point.im != b.point.im ? a.point.im < b.point.im : a.point.re < b.point.re;
    };
    std::sort(zeros.begin(), zeros.end(), by_position);
    std::sort(saddles.begin(), saddles.end(), by_position);

    x.singularities.clear();
    x.singularities.insert(x.singularities.end(), zeros.begin(), zeros.end());
    x.singularities.insert(x.singularities.end(), poles.begin(), poles.end());
    x.singularities.insert(x.singularities.end(), saddles.begin(), saddles.end());

    // Attach to every curve passing within 1.5 cell diagonals.
    for (auto& curve : x.curves) curve.attached_singularities.clear();
    for (const auto& s : x.singularities) {
        std::optional<CurveKind> only;
        if (s.type == SingularityType::saddle) {
            const auto v = detail::try_eval(oracle, s.point.value());
            if (!v) continue;
            const double tol = 1e-6 * std::abs(*v);
            if (std::abs(v->imag()) <= tol) {
                only = CurveKind::thick;
            } else if (std::abs(v->real()) <= tol) {
                only = CurveKind::thin;
            } else {
                continue;  // a zero of f' off the X-ray lines
            }
        }
        for (auto& curve : x.curves) {
            if (only && curve.kind != *only) continue;
            const bool close = std::any_of(curve.points.begin(), curve.points.end(), [&](const ComplexPoint& p) {
                return std::abs(p.value() - s.point.value()) < 1.5 * diag;
            });
            if (close) curve.attached_singularities.push_back(s);
        }
    }
}

MonotonicityReport monotonicity_check(const CurvePolyline& curve, const FunctionOracle& oracle) {
    for (const auto& s : curve.attached_singularities) {
        if (s.type == SingularityType::pole) throw DomainError("monotonicity check: curve carries a pole");
    }
    MonotonicityReport report;
    const std::size_t n = curve.points.size();
    if (n < 3) return report;

    std::vector<double> v(n);
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto val = detail::try_eval(oracle, curve.points[k].value());
        v[k] = val ? detail::other_component(*val, curve.kind) : 0.0;
        scale = std::max(scale, std::abs(v[k]));
    }
    // Split at the vertices nearest to attached saddles.
    std::vector<std::size_t> cuts{0};
    for (const auto& s : curve.attached_singularities) {
        if (s.type != SingularityType::saddle) continue;
        std::size_t best = 0;
        for (std::size_t k = 1; k < n; ++k) {
            if (std::abs(curve.points[k].value() - s.point.value()) <
                std::abs(curve.points[best].value() - s.point.value())) {
                best = k;
            }
        }
        cuts.push_back(best);
    }
    cuts.push_back(n - 1);
    std::sort(cuts.begin(), cuts.end());

    const double noise = 1e-12 * scale;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const std::size_t a = cuts[c];
        const std::size_t b = cuts[c + 1];
        if (b <= a + 1) continue;
        double trend = 0.0;
        for (std::size_t k = a; k < b; ++k) trend += v[k + 1] - v[k];
        // Skip the segments adjacent to a saddle vertex itself.
        const std::size_t lo = c == 0 ? a : a + 1;
        const std::size_t hi = c + 2 == cuts.size() ? b : b - 1;
        for (std::size_t k = lo; k < hi; ++k) {
            const double d = v[k + 1] - v[k];
            if (std::abs(d) > noise && (d > 0.0) != (trend > 0.0)) {
                report.monotone = false;
                report.violations.push_back(curve.points[k]);
            }
        }
    }
    return report;
}

}  // namespace zx
