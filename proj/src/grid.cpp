#include <algorithm>
#include <cmath>

#include "xray_local.hpp"
#include "zetaxray/xray.hpp"

namespace zx {

GridSpec::GridSpec(int nx_, int ny_, int depth) : nx(nx_), ny(ny_), max_refinement_depth(depth) {
    if (nx < 8 || ny < 8) throw RangeError("grid: need at least 8 cells per axis");
    if (depth < 0 || depth > 8) throw RangeError("grid: refinement depth must be in 0..8");
}

GridSpec GridSpec::for_rect(const Rectangle& rect, double cells_per_unit, int depth) {
    if (!(cells_per_unit > 0.0)) throw RangeError("grid: cells per unit must be positive");
    const int nx = std::max(8, static_cast<int>(std::ceil(rect.width() * cells_per_unit - 1e-9)));
    const int ny = std::max(8, static_cast<int>(std::ceil(rect.height() * cells_per_unit - 1e-9)));
    return GridSpec(nx, ny, depth);
}

std::string_view to_string(CurveKind k) { return k == CurveKind::thick ? "thick" : "thin"; }

std::string_view to_string(SingularityType t) {
    switch (t) {
        case SingularityType::zero: return "zero";
        case SingularityType::pole: return "pole";
        case SingularityType::saddle: return "saddle";
    }
    return "?";
}

ComplexPoint SignFields::node(int i, int j) const {
    // Exact endpoints at the borders; no accumulated drift across the grid.
    const double s = i == grid.nx ? rect.sigma_max : rect.sigma_min + i * dx;
    const double t = j == grid.ny ? rect.t_max : rect.t_min + j * dy;
    return {s, t};
}

namespace {

SignFields prepare(const Rectangle& rect, const GridSpec& grid) {
    SignFields f;
    f.rect = rect;
    f.grid = grid;
    f.dx = rect.width() / grid.nx;
    f.dy = rect.height() / grid.ny;
    const std::size_t n = static_cast<std::size_t>(grid.nx + 1) * (grid.ny + 1);
    f.values.assign(n, complex(0.0, 0.0));
    f.flags.assign(n, SignFields::none);
    return f;
}

void sample_row(SignFields& f, const FunctionOracle& oracle, int j, double nudge) {
    for (int i = 0; i <= f.grid.nx; ++i) {
        const auto s = detail::sample_point(oracle, f.node(i, j), nudge);
        const std::size_t k = f.index(i, j);
        f.values[k] = s.value;
        f.flags[k] = static_cast<std::uint8_t>((s.nudged ? SignFields::nudged : 0) |
                                               (s.invalid ? SignFields::invalid : 0));
    }
}

void note_invalid(SignFields& f) {
    long bad = std::count_if(f.flags.begin(), f.flags.end(), [](std::uint8_t b) { return b & SignFields::invalid; });
    if (bad > 0) {
        f.warnings.push_back(std::to_string(bad) + " grid nodes could not be evaluated; their cells are skipped");
    }
}

double nudge_size(const SignFields& f) { return 1e-7 * std::min(f.dx, f.dy); }

}  // namespace

SignFields sample_grid(const FunctionOracle& oracle, const Rectangle& rect, const GridSpec& grid) {
    SignFields f = prepare(rect, grid);
    const double nudge = nudge_size(f);
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j <= grid.ny; ++j) sample_row(f, oracle, j, nudge);
    note_invalid(f);
    return f;
}

SignFields sample_grid_serial(const FunctionOracle& oracle, const Rectangle& rect, const GridSpec& grid) {
    SignFields f = prepare(rect, grid);
    const double nudge = nudge_size(f);
    for (int j = 0; j <= grid.ny; ++j) sample_row(f, oracle, j, nudge);
    note_invalid(f);
    return f;
}

XRay trace_xray(const FunctionOracle& oracle, const Rectangle& rect, const GridSpec& grid) {
    const SignFields fields = sample_grid(oracle, rect, grid);
    XRay x = extract_curves(fields, oracle);
    detect_singularities(x, fields, oracle);
    classify_and_number(x, oracle);
    return x;
}

}  // namespace zx
