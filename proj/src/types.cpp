#include "zetaxray/types.hpp"

namespace zx {

ComplexPoint::ComplexPoint(double sigma, double t) : re(sigma), im(t) {
    if (!std::isfinite(sigma) || !std::isfinite(t)) {
        throw DomainError("ComplexPoint: non-finite component");
    }
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::euler_maclaurin: return "euler_maclaurin";
        case Method::riemann_siegel: return "riemann_siegel";
        case Method::series: return "series";
        case Method::reflection: return "reflection";
    }
    return "unknown";
}

}  // namespace zx
