#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include <boost/math/tools/toms748_solve.hpp>

#include "xray_local.hpp"
#include "zetaxray/xray.hpp"

namespace zx {
namespace {

constexpr CurveKind kinds[] = {CurveKind::thick, CurveKind::thin};

// Crossing of the level set with the segment a-b by bracketing on the segment.
std::optional<ComplexPoint> root_on_edge(const FunctionOracle& oracle, CurveKind kind, ComplexPoint a, ComplexPoint b,
                                         double va, double vb) {
    if (va == 0.0) return a;
    if (vb == 0.0) return b;
    if (std::signbit(va) == std::signbit(vb)) return std::nullopt;
    auto at = [&](double lambda) {
        return ComplexPoint(a.re + lambda * (b.re - a.re), a.im + lambda * (b.im - a.im));
    };
    auto g = [&](double lambda) {
        if (lambda == 0.0) return va;
        if (lambda == 1.0) return vb;
        const auto v = detail::try_eval(oracle, at(lambda).value());
        if (!v) throw NumericError("edge root: evaluation failed");
        return detail::component(*v, kind);
    };
    try {
        std::uintmax_t iterations = 60;
        const auto r = boost::math::tools::toms748_solve(g, 0.0, 1.0, va, vb,
                                                         boost::math::tools::eps_tolerance<double>(48), iterations);
        return at(0.5 * (r.first + r.second));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool node_sign(const SignFields& f, int i, int j, CurveKind k) {
    return k == CurveKind::thick ? f.sign_im(i, j) : f.sign_re(i, j);
}

// Edge ids: horizontal edges (i,j)-(i+1,j) first, then vertical (i,j)-(i,j+1).
struct Edges {
    int nx;
    int ny;
    long horizontal_count() const { return static_cast<long>(nx) * (ny + 1); }
    long count() const { return horizontal_count() + static_cast<long>(nx + 1) * ny; }
    long h(int i, int j) const { return static_cast<long>(j) * nx + i; }
    long v(int i, int j) const { return horizontal_count() + static_cast<long>(j) * (nx + 1) + i; }

    std::array<int, 4> ends(long id) const {
        if (id < horizontal_count()) {
            const int i = static_cast<int>(id % nx);
            const int j = static_cast<int>(id / nx);
            return {i, j, i + 1, j};
        }
        const long r = id - horizontal_count();
        const int i = static_cast<int>(r % (nx + 1));
        const int j = static_cast<int>(r / (nx + 1));
        return {i, j, i, j + 1};
    }

    bool on_border(long id) const {
        const auto e = ends(id);
        if (id < horizontal_count()) return e[1] == 0 || e[1] == ny;
        return e[0] == 0 || e[0] == nx;
    }
};

enum class Resolution { bl_tr, br_tl, unresolved };

bool lattice_connected(const std::vector<char>& sg, int m, int a0, int b0, int a1, int b1) {
    const char want = sg[static_cast<std::size_t>(b0 * (m + 1) + a0)];
    std::vector<char> seen(sg.size(), 0);
    std::vector<int> stack{b0 * (m + 1) + a0};
    seen[static_cast<std::size_t>(stack.back())] = 1;
    while (!stack.empty()) {
        const int k = stack.back();
        stack.pop_back();
        const int a = k % (m + 1);
        const int b = k / (m + 1);
        if (a == a1 && b == b1) return true;
        const int nb[4][2] = {{a + 1, b}, {a - 1, b}, {a, b + 1}, {a, b - 1}};
        for (const auto& n : nb) {
            if (n[0] < 0 || n[0] > m || n[1] < 0 || n[1] > m) continue;
            const int q = n[1] * (m + 1) + n[0];
            if (seen[static_cast<std::size_t>(q)] || sg[static_cast<std::size_t>(q)] != want) continue;
            seen[static_cast<std::size_t>(q)] = 1;
            stack.push_back(q);
        }
    }
    return false;
}

// Decide which diagonal pair of a saddle-pattern cell is joined by sampling
// a (2^d + 1)^2 lattice inside it and flood-filling.
Resolution resolve_cell(const FunctionOracle& oracle, const SignFields& f, int i, int j, CurveKind kind,
                        long& samples) {
    const ComplexPoint p0 = f.node(i, j);
    const double nudge = 1e-7 * std::min(f.dx, f.dy);
    std::vector<char> prev;
    for (int d = 1; d <= f.grid.max_refinement_depth; ++d) {
        const int m = 1 << d;
        std::vector<char> sg(static_cast<std::size_t>((m + 1) * (m + 1)));
        for (int b = 0; b <= m; ++b) {
            for (int a = 0; a <= m; ++a) {
                char s;
                const bool corner = (a == 0 || a == m) && (b == 0 || b == m);
                if (corner) {
                    s = node_sign(f, i + a / m, j + b / m, kind);
                } else if (!prev.empty() && a % 2 == 0 && b % 2 == 0) {
                    s = prev[static_cast<std::size_t>((b / 2) * (m / 2 + 1) + a / 2)];
                } else {
                    const ComplexPoint p(p0.re + a * f.dx / m, p0.im + b * f.dy / m);
                    const auto smp = detail::sample_point(oracle, p, nudge);
                    ++samples;
                    if (smp.invalid) return Resolution::unresolved;
                    s = !std::signbit(detail::component(smp.value, kind));
                }
                sg[static_cast<std::size_t>(b * (m + 1) + a)] = s;
            }
        }
        const bool diag_a = lattice_connected(sg, m, 0, 0, m, m);
        const bool diag_b = lattice_connected(sg, m, m, 0, 0, m);
        if (diag_a && !diag_b) return Resolution::bl_tr;
        if (diag_b && !diag_a) return Resolution::br_tl;
        prev = std::move(sg);
    }
    return Resolution::unresolved;
}

struct Adjacency {
    std::array<long, 2> nb{-1, -1};
    int degree = 0;
    void add(long n) {
        if (degree < 2) nb[static_cast<std::size_t>(degree)] = n;
        ++degree;
    }
};

void extract_kind(const SignFields& f, const FunctionOracle& oracle, CurveKind kind, XRay& out) {
    const Edges edges{f.grid.nx, f.grid.ny};
    const double diag = std::hypot(f.dx, f.dy);

    // Crossed edges.
    std::vector<char> crossed(static_cast<std::size_t>(edges.count()), 0);
    std::vector<long> crossed_ids;
    for (long id = 0; id < edges.count(); ++id) {
        const auto e = edges.ends(id);
        if (!f.valid(e[0], e[1]) || !f.valid(e[2], e[3])) continue;
        if (node_sign(f, e[0], e[1], kind) != node_sign(f, e[2], e[3], kind)) {
            crossed[static_cast<std::size_t>(id)] = 1;
            crossed_ids.push_back(id);
        }
    }

    // Cell segments; saddle-pattern cells resolved in parallel.
    struct Cell {
        int i;
        int j;
    };
    std::vector<Cell> ambiguous;
    std::vector<Adjacency> adj(static_cast<std::size_t>(edges.count()));
    auto link = [&](long a, long b) {
        adj[static_cast<std::size_t>(a)].add(b);
        adj[static_cast<std::size_t>(b)].add(a);
    };
    for (int j = 0; j < f.grid.ny; ++j) {
        for (int i = 0; i < f.grid.nx; ++i) {
            if (!f.valid(i, j) || !f.valid(i + 1, j) || !f.valid(i, j + 1) || !f.valid(i + 1, j + 1)) continue;
            const long e[4] = {edges.h(i, j), edges.v(i + 1, j), edges.h(i, j + 1), edges.v(i, j)};
            long hit[4];
            int n = 0;
            for (long id : e) {
                if (crossed[static_cast<std::size_t>(id)]) hit[n++] = id;
            }
            if (n == 2) link(hit[0], hit[1]);
            if (n == 4) ambiguous.push_back({i, j});
        }
    }
    std::vector<Resolution> resolution(ambiguous.size());
    long samples = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : samples)
    for (std::size_t c = 0; c < ambiguous.size(); ++c) {
        resolution[c] = resolve_cell(oracle, f, ambiguous[c].i, ambiguous[c].j, kind, samples);
    }
    out.evaluations += samples;
    for (std::size_t c = 0; c < ambiguous.size(); ++c) {
        const int i = ambiguous[c].i;
        const int j = ambiguous[c].j;
        const long bottom = edges.h(i, j), right = edges.v(i + 1, j), top = edges.h(i, j + 1), left = edges.v(i, j);
        switch (resolution[c]) {
            case Resolution::bl_tr:
                link(bottom, right);
                link(left, top);
                break;
            case Resolution::br_tl:
                link(bottom, left);
                link(right, top);
                break;
            case Resolution::unresolved: out.unresolved_cells.push_back({i, j, kind}); break;
        }
    }

    // Vertex positions: linear interpolation, then Newton projection.
    std::vector<ComplexPoint> position(crossed_ids.size());
    std::vector<char> projected(crossed_ids.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t c = 0; c < crossed_ids.size(); ++c) {
        const auto e = edges.ends(crossed_ids[c]);
        const double va = detail::component(f.value(e[0], e[1]), kind);
        const double vb = detail::component(f.value(e[2], e[3]), kind);
        const double lambda = std::clamp(va / (va - vb), 0.0, 1.0);
        const ComplexPoint a = f.node(e[0], e[1]);
        const ComplexPoint b = f.node(e[2], e[3]);
        const ComplexPoint guess(a.re + lambda * (b.re - a.re), a.im + lambda * (b.im - a.im));
        const bool on_border = (e[0] == e[2] && (e[0] == 0 || e[0] == f.grid.nx)) ||
                               (e[1] == e[3] && (e[1] == 0 || e[1] == f.grid.ny));
        if (on_border) {
            // Stay on the boundary: solve along the edge itself.
            const auto p = root_on_edge(oracle, kind, a, b, va, vb);
            position[c] = p ? *p : guess;
            projected[c] = p.has_value();
            continue;
        }
        const auto p = detail::project_onto(oracle, kind, guess, diag, diag);
        position[c] = p ? p->point : guess;
        projected[c] = p.has_value();
    }
    const long unprojected = std::count(projected.begin(), projected.end(), 0);
    if (unprojected > 0) {
        out.diagnostics.push_back(std::to_string(unprojected) + " " + std::string(to_string(kind)) +
                                  " vertices kept at grid accuracy (projection failed)");
    }
    auto slot = [&](long id) {
        return static_cast<std::size_t>(std::lower_bound(crossed_ids.begin(), crossed_ids.end(), id) -
                                        crossed_ids.begin());
    };

    // Chains from endpoints first, then the closed loops.
    std::vector<char> visited(static_cast<std::size_t>(edges.count()), 0);
    auto walk = [&](long start, bool closed) {
        CurvePolyline curve;
        curve.kind = kind;
        curve.closed = closed;
        long prev = -1;
        long cur = start;
        while (cur >= 0 && !visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = 1;
            curve.points.push_back(position[slot(cur)]);
            const auto& a = adj[static_cast<std::size_t>(cur)];
            long next = -1;
            for (int k = 0; k < std::min(a.degree, 2); ++k) {
                if (a.nb[static_cast<std::size_t>(k)] != prev && !visited[static_cast<std::size_t>(a.nb[static_cast<std::size_t>(k)])]) {
                    next = a.nb[static_cast<std::size_t>(k)];
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
        if (!closed) {
            const long last = prev;
            curve.truncated = !edges.on_border(start) || !edges.on_border(last);
        }
        if (closed && !curve.points.empty()) curve.points.push_back(curve.points.front());
        out.curves.push_back(std::move(curve));
    };
    for (long id : crossed_ids) {
        if (!visited[static_cast<std::size_t>(id)] && adj[static_cast<std::size_t>(id)].degree <= 1) walk(id, false);
    }
    for (long id : crossed_ids) {
        if (!visited[static_cast<std::size_t>(id)]) walk(id, true);
    }
}

}  // namespace

XRay extract_curves(const SignFields& fields, const FunctionOracle& oracle) {
    XRay x;
    x.rect = fields.rect;
    x.grid = fields.grid;
    x.evaluations = static_cast<long>(fields.values.size());
    x.diagnostics = fields.warnings;
    for (CurveKind k : kinds) extract_kind(fields, oracle, k, x);
    // Single-vertex fragments (an edge whose cells were all skipped) carry no
    // curve information.
    std::erase_if(x.curves, [](const CurvePolyline& c) { return c.points.size() < 2; });
    if (!x.unresolved_cells.empty()) {
        x.diagnostics.push_back(std::to_string(x.unresolved_cells.size()) +
                                " cells unresolved at maximum refinement depth; curves cut there");
    }
    return x;
}

}  // namespace zx
