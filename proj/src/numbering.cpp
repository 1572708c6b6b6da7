#include <algorithm>
#include <cmath>

#include "zetaxray/gram.hpp"
#include "zetaxray/xray.hpp"

namespace zx {
namespace {

bool parity_ok(CurveKind kind, long n) {
    const bool odd = (n % 2) != 0;
    return kind == CurveKind::thick ? odd : !odd;
}

bool is_real_axis(const CurvePolyline& c, double tol) {
    return std::all_of(c.points.begin(), c.points.end(), [&](const ComplexPoint& p) { return std::abs(p.im) < tol; });
}

}  // namespace

void classify_and_number(XRay& x, const FunctionOracle& oracle) {
    if (oracle.kind() != FunctionOracle::Kind::zeta) return;  // the numbering scheme is specific to zeta
    if (!(x.rect.sigma_min < -1.0 && x.rect.sigma_max > -1.0)) {
        x.diagnostics.push_back("rectangle does not span sigma = -1; lines not numbered");
        return;
    }
    const double diag = std::hypot(x.rect.width() / x.grid.nx, x.rect.height() / x.grid.ny);

    for (auto& c : x.curves) {
        c.line_number.reset();
        c.crossing_numbers.clear();
        std::vector<long> nums;
        auto add = [&](long n, const char* rule, double where) {
            if (!parity_ok(c.kind, n)) {
                x.diagnostics.push_back(std::string(to_string(c.kind)) + " curve given number " + std::to_string(n) +
                                        " by the " + rule + " rule at " + std::to_string(where) +
                                        ": parity mismatch, withheld");
                return;
            }
            nums.push_back(n);
        };
        const bool axis = c.kind == CurveKind::thick && is_real_axis(c, 1e-6);

        for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
            const ComplexPoint a = c.points[k];
            const ComplexPoint b = c.points[k + 1];
            // sigma = -1 crossings above t = 5.
            if ((a.re + 1.0) * (b.re + 1.0) < 0.0 || (a.re == -1.0 && k == 0)) {
                const double lam = a.re == b.re ? 0.0 : (-1.0 - a.re) / (b.re - a.re);
                const double t = a.im + lam * (b.im - a.im);
                if (t > 5.0) add(line_number(t), "sigma = -1", t);
            }
            // Thin curves through trivial zeros -2n, n >= 2.
            if (c.kind == CurveKind::thin && ((a.im < 0.0 && b.im >= 0.0) || (a.im >= 0.0 && b.im < 0.0))) {
                const double s = a.re + (0.0 - a.im) / (b.im - a.im) * (b.re - a.re);
                const long n = std::lround(s);
                if (n <= -4 && n % 2 == 0 && std::abs(s - n) < 0.25) add(n, "real-axis", s);
            }
        }
        // Thick curves (other than the axis) coming down onto the real axis
        // between -2n and -2n-2, n >= 2. Vertices lying on the axis itself
        // (where a curve was joined to the axis at a saddle) are ignored.
        if (c.kind == CurveKind::thick && !axis) {
            const ComplexPoint* contact = nullptr;
            for (const auto& p : c.points) {
                if (p.im > 1e-6 && (!contact || p.im < contact->im)) contact = &p;
            }
            if (contact && contact->im < 1.5 * diag && contact->re < -4.0) {
                const long k = static_cast<long>(std::floor(-contact->re / 2.0));
                if (k >= 2) add(-(2 * k + 1), "real-axis", contact->re);
            }
        }
        if (!nums.empty()) {
            c.crossing_numbers = nums;
            c.line_number = *std::min_element(nums.begin(), nums.end());
        }
    }
}

}  // namespace zx
