#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetaxray/geometry.hpp"
#include "zetaxray/oracle.hpp"
#include "zetaxray/types.hpp"

namespace zx {

/// Cells per axis and the subdivision depth used to resolve ambiguous cells.
struct GridSpec {
    int nx = 8;
    int ny = 8;
    int max_refinement_depth = 5;

    GridSpec() = default;
    GridSpec(int nx, int ny, int depth);  // validates nx, ny >= 8, depth in 0..8

    /// cells_per_unit cells per unit length on each axis (rounded up, >= 8).
    static GridSpec for_rect(const Rectangle& rect, double cells_per_unit = 8.0, int depth = 5);
};

/// Thick curves are Im f = 0, thin curves Re f = 0.
enum class CurveKind { thick, thin };

enum class SingularityType { zero, pole, saddle };

std::string_view to_string(CurveKind k);
std::string_view to_string(SingularityType t);

struct Singularity {
    ComplexPoint point;
    SingularityType type = SingularityType::zero;
    int multiplicity = 1;  // winding of f (zeros, poles) or of f' (saddles)
    bool refined = true;   // false: Newton failed, point is a cell centre
};

struct CurvePolyline {
    CurveKind kind = CurveKind::thick;
    std::vector<ComplexPoint> points;
    std::optional<long> line_number;
    std::vector<long> crossing_numbers;  // every numbered crossing, in order along the curve
    std::vector<Singularity> attached_singularities;
    bool closed = false;
    bool truncated = false;  // ends at an unresolved cell or a skipped cell
};

/// Node samples of f over the grid. Nodes where a component of f vanished
/// exactly, or which hit a declared pole, hold the value at a point nudged by
/// a tiny offset and are flagged.
struct SignFields {
    enum Flag : std::uint8_t { none = 0, nudged = 1, invalid = 2 };

    Rectangle rect;
    GridSpec grid;
    double dx = 0.0;
    double dy = 0.0;
    std::vector<complex> values;  // row-major, (nx + 1) * (ny + 1)
    std::vector<std::uint8_t> flags;
    std::vector<std::string> warnings;

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * (grid.nx + 1) + i; }
    ComplexPoint node(int i, int j) const;
    complex value(int i, int j) const { return values[index(i, j)]; }
    bool sign_re(int i, int j) const { return !std::signbit(value(i, j).real()); }
    bool sign_im(int i, int j) const { return !std::signbit(value(i, j).imag()); }
    bool valid(int i, int j) const { return (flags[index(i, j)] & invalid) == 0; }
};

/// Sample f on the (nx+1) x (ny+1) nodes, rows in parallel.
SignFields sample_grid(const FunctionOracle& oracle, const Rectangle& rect, const GridSpec& grid);

/// Single-threaded reference for sample_grid.
SignFields sample_grid_serial(const FunctionOracle& oracle, const Rectangle& rect, const GridSpec& grid);

struct CellFlag {
    int i = 0;
    int j = 0;
    CurveKind kind = CurveKind::thick;
};

/// Everything the tracer knows about one X-ray.
struct XRay {
    Rectangle rect;
    GridSpec grid;
    std::vector<CurvePolyline> curves;
    std::vector<Singularity> singularities;
    std::vector<CellFlag> unresolved_cells;
    std::vector<std::string> diagnostics;
    long evaluations = 0;
};

/// Marching squares on both sign fields, ambiguous cells resolved by
/// sub-sampling, vertices projected onto their level set by Newton steps.
XRay extract_curves(const SignFields& fields, const FunctionOracle& oracle);

/// Locate zeros, poles and saddles and attach them to the curves through them.
void detect_singularities(XRay& xray, const SignFields& fields, const FunctionOracle& oracle);

/// Number the curves: crossings of sigma = -1 above t = 5 by the nearest
/// integer to 2t/pi log(t/2pi) - 2t/pi + 1/2, and real-axis crossings left of
/// -3 by the trivial zero they pass (thin) or lie between (thick). Parity
/// mismatches are withheld and reported in diagnostics.
void classify_and_number(XRay& xray, const FunctionOracle& oracle);

/// sample_grid + extract_curves + detect_singularities + classify_and_number.
XRay trace_xray(const FunctionOracle& oracle, const Rectangle& rect, const GridSpec& grid);

struct MonotonicityReport {
    bool monotone = true;
    std::vector<ComplexPoint> violations;
};

/// The non-vanishing component (Re f on thick curves, Im f on thin ones) must
/// be strictly monotone between consecutive attached saddles. Throws
/// DomainError if a pole is attached to the curve.
MonotonicityReport monotonicity_check(const CurvePolyline& curve, const FunctionOracle& oracle);

// Curve continuation.

struct ContinuationOptions {
    double initial_step = 0.05;
    double max_step = 0.2;
    double min_step = 1e-7;
    int max_points = 200000;
    bool stop_at_sign_change = true;
    Rectangle region{-1.5, 10.5, -1e9, 1e9};
};

enum class ContinuationStop { sign_change, left_region, step_underflow, point_limit, predicate };

struct ContinuationResult {
    std::vector<ComplexPoint> points;
    ContinuationStop stop = ContinuationStop::left_region;
    /// Refined points where the non-vanishing component changed sign (zeros
    /// of f on the curve), in the order met.
    std::vector<ComplexPoint> crossings;
};

/// Follow the level curve of `kind` through `start` (already close to it) in
/// the direction in which the non-vanishing component increases
/// (direction = +1) or decreases (-1). Stops when that component changes sign,
/// the curve leaves options.region, or `stop_when` returns true for the
/// newest point.
ContinuationResult continue_curve(const FunctionOracle& oracle, CurveKind kind, ComplexPoint start,
                                  int direction, const ContinuationOptions& options = {},
                                  const std::function<bool(ComplexPoint)>& stop_when = nullptr);

/// A sheet: the thick curve through the Gram point g_n, followed to the zero
/// it carries. A zero-free parallel is paired with the zero on the parallel
/// immediately above it.
struct Sheet {
    CurvePolyline curve;
    std::optional<ComplexPoint> zero;
    std::optional<long> zero_ordinal;
    std::optional<long> gram_point_index;
    std::optional<std::pair<long, long>> line_numbers;
    bool via_parallel = false;
};

/// Trace the sheet through g_n. When `zero_heights` (sorted ordinates of the
/// critical-line zeros from the first one up) is given, zero_ordinal is set
/// by matching the zero found. With `with_line_numbers` both ends are
/// followed to sigma = -1 and numbered.
Sheet trace_sheet(long gram_index, const FunctionOracle& oracle, const std::vector<double>* zero_heights = nullptr,
                  bool with_line_numbers = false);

/// Zero ordinals paired with g_{-1}, g_0, ..., g_{count-2}.
std::vector<long> sheet_permutation(int count);

/// Trace the parallel line at height ~ k pi / log 2 (sigma = 10) leftward to
/// sigma = -1.
struct ParallelTrace {
    long k = 0;
    double t_at_sigma10 = 0.0;
    double t_at_critical = 0.0;  // where it crosses sigma = 1/2
    double t_at_minus_one = 0.0;
    std::optional<ComplexPoint> zero;  // zero-carrying parallels (odd k)
};

ParallelTrace trace_parallel(long k, const FunctionOracle& oracle);

// Output.

struct RenderStyle {
    double thin_stroke = 0.6;
    bool shade_strip = true;
    bool axes = true;
    bool markers = true;
    bool labels = false;
    bool point_cloud = false;  // dots at vertices instead of polylines
    std::vector<ComplexPoint> gram_points;
};

/// Deterministic SVG document for the curves over `rect`.
std::string render_svg(const std::vector<CurvePolyline>& curves, const std::vector<Singularity>& singularities,
                       const Rectangle& rect, const RenderStyle& style = {});

/// One "sigma t kind" row per vertex.
std::string point_cloud(const std::vector<CurvePolyline>& curves);

/// One JSON record per curve: kind, number, closed, endpoints, singularities.
std::string curve_inventory(const std::vector<CurvePolyline>& curves);

}  // namespace zx
