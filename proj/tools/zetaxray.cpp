#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetaxray/gram.hpp"
#include "zetaxray/oracle.hpp"
#include "zetaxray/xray.hpp"
#include "zetaxray/zeta.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zx;

enum class Format { text, json, svg };

struct Common {
    Format format = Format::text;
    std::string out;
    bool quiet = false;
    int threads = 0;
};

// Parses "lo..hi" into two values.
template <class T>
std::pair<T, T> parse_range(const std::string& text, const char* what) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw RangeError(std::string(what) + ": expected lo..hi, got '" + text + "'");
    std::istringstream a(text.substr(0, dots));
    std::istringstream b(text.substr(dots + 2));
    T lo{};
    T hi{};
    if (!(a >> lo) || !(b >> hi) || !a.eof() || !b.eof()) {
        throw RangeError(std::string(what) + ": cannot parse '" + text + "'");
    }
    if (!(lo < hi)) throw RangeError(std::string(what) + ": requires lo < hi");
    return {lo, hi};
}

// "a+bi", "a-bi", "a", "bi".
complex parse_complex(std::string text) {
    std::erase(text, ' ');
    if (text.empty()) throw DomainError("empty complex number");
    double re = 0.0;
    double im = 0.0;
    if (text.back() == 'i') {
        text.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t k = text.size(); k-- > 1;) {
            if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        const std::string re_part = split == std::string::npos ? "" : text.substr(0, split);
        std::string im_part = split == std::string::npos ? text : text.substr(split);
        if (im_part == "+" || im_part == "-" || im_part.empty()) im_part += "1";
        std::size_t used = 0;
        im = std::stod(im_part, &used);
        if (used != im_part.size()) throw DomainError("cannot parse complex number");
        if (!re_part.empty()) {
            re = std::stod(re_part, &used);
            if (used != re_part.size()) throw DomainError("cannot parse complex number");
        }
    } else {
        std::size_t used = 0;
        re = std::stod(text, &used);
        if (used != text.size()) throw DomainError("cannot parse complex number");
    }
    return {re, im};
}

Rectangle parse_rect(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    if (v.size() != 4) throw RangeError("--rect expects sigma_min,sigma_max,t_min,t_max");
    return Rectangle(v[0], v[1], v[2], v[3]);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Writes to --out, or standard output when no path is given.
void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw DomainError("cannot write " + c.out);
    f << text;
}

void note(const Common& c, const std::string& message) {
    if (!c.quiet) std::cerr << message << '\n';
}

ProgressFn progress_printer(const Common& c) {
    if (c.quiet) return {};
    return [](long done, long total) { std::cerr << "  " << done << " / " << total << " Gram intervals\n"; };
}

// eval

int run_eval(const Common& c, const std::string& s_text, const std::string& method, double target) {
    const ComplexPoint s(parse_complex(s_text));
    EvalResult r;
    if (method == "auto") {
        r = zeta(s, target);
    } else if (method == "em") {
        r = zeta_euler_maclaurin(s, target);
    } else if (method == "series") {
        r = zeta_series(s, target);
    } else {  // rs
        if (s.re != 0.5) throw DomainError("eval: Riemann-Siegel needs Re s = 1/2");
        const HardyZ z = riemann_siegel_z(s.im);
        r = z.eval;
        r.value = std::polar(z.eval.value.real(), -z.parts.theta);
    }
    if (c.format == Format::json) {
        json j;
        j["sigma"] = s.re;
        j["t"] = s.im;
        j["re"] = r.value.real();
        j["im"] = r.value.imag();
        j["method"] = to_string(r.method);
        j["error_bound"] = r.error_bound;
        j["best_effort"] = r.best_effort;
        emit(c, j.dump() + "\n");
    } else {
        std::string line = fmt("%.10f", r.value.real());
        line += (std::signbit(r.value.imag()) ? " - " : " + ") + fmt("%.10f", std::abs(r.value.imag())) + "i";
        line += "  method " + std::string(to_string(r.method)) + "  error " + fmt("%.2e", r.error_bound);
        if (r.best_effort) line += "  (best effort)";
        emit(c, line + "\n");
    }
    return 0;
}

// zeros

int run_zeros(const Common& c, const std::string& t_range, const std::string& gram_range) {
    ZeroScan scan;
    if (!gram_range.empty()) {
        const auto [lo, hi] = parse_range<long>(gram_range, "--gram");
        scan = scan_gram_range(lo, hi, progress_printer(c));
    } else {
        const auto [lo, hi] = parse_range<double>(t_range, "--t");
        scan = find_zeros(lo, hi);
    }
    for (const auto& w : scan.warnings) std::cerr << "warning: " << w << '\n';
    std::string out;
    if (c.format == Format::json) {
        for (const auto& z : scan.zeros) {
            json j;
            j["ordinal"] = z.ordinal;
            j["t"] = z.t;
            j["bracket_lo"] = z.bracket_lo;
            j["bracket_hi"] = z.bracket_hi;
            out += j.dump() + "\n";
        }
    } else {
        out += "ordinal  t                 bracket_width\n";
        for (const auto& z : scan.zeros) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%7ld  %16.9f  %.1e\n", z.ordinal, z.t, z.refinement_width);
            out += buf;
        }
    }
    emit(c, out);
    note(c, std::to_string(scan.zeros.size()) + " zeros; census " + (scan.complete ? "complete" : "INCOMPLETE"));
    return scan.complete ? 0 : 3;
}

// gram

std::string gram_rows(const GramClassification& cls, Format format) {
    // Block id: position of the enclosing Gram block, -1 when the point is not inside one.
    auto block_of = [&](long n) -> long {
        for (std::size_t b = 0; b < cls.blocks.size(); ++b) {
            if (n > cls.blocks[b].start_index && n < cls.blocks[b].end_index) return static_cast<long>(b);
        }
        return -1;
    };
    std::string out;
    if (format != Format::json) out += "index       t                  Z(t)              quality  block\n";
    for (const auto& g : cls.points) {
        const char* quality = g.quality == GramQuality::good ? "good" : "bad";
        if (format == Format::json) {
            json j;
            j["index"] = g.index;
            j["t"] = g.t;
            j["z"] = g.z_value;
            j["quality"] = quality;
            j["block"] = block_of(g.index);
            out += j.dump() + "\n";
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-10ld  %-17.9f  %-+16.9e  %-7s  %ld\n", g.index, g.t, g.z_value, quality,
                          block_of(g.index));
            out += buf;
        }
    }
    return out;
}

int run_gram(const Common& c, const std::string& range) {
    const auto [lo, hi] = parse_range<long>(range, "--gram");
    if (lo < -1) throw RangeError("--gram: Gram indices start at -1");
    std::string out;
    if (c.format != Format::json) out += "index       t                  Z(t)              quality\n";
    for (long n = lo; n < hi; ++n) {
        const GramPoint g = gram_point(n);
        const char* quality = g.quality == GramQuality::good ? "good" : "bad";
        if (c.format == Format::json) {
            json j;
            j["index"] = g.index;
            j["t"] = g.t;
            j["z"] = g.z_value;
            j["quality"] = quality;
            out += j.dump() + "\n";
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-10ld  %-17.9f  %-+16.9e  %s\n", g.index, g.t, g.z_value, quality);
            out += buf;
        }
    }
    emit(c, out);
    return 0;
}

// audit

int run_audit(const Common& c, const std::string& range) {
    const auto [lo, hi] = parse_range<long>(range, "--gram");
    note(c, "auditing Gram intervals " + std::to_string(lo) + " .. " + std::to_string(hi - 1));
    const AuditReport report = audit_laws(lo, hi, progress_printer(c));
    for (const auto& w : report.classification.scan.warnings) std::cerr << "warning: " << w << '\n';

    auto comp = [](const std::optional<long>& n) { return n ? std::to_string(*n) : std::string("none"); };
    std::cout << "Gram's law: " << report.gram_law.size() << " violation(s) in [" << lo << ", " << hi << ")\n";
    for (const auto& v : report.gram_law) {
        std::cout << "  (g" << v.index << ", g" << v.index + 1 << ") holds " << v.zero_count
                  << " zero(s); compensated by interval " << comp(v.compensated_by) << "\n";
    }
    std::cout << "Rosser's rule: " << report.rosser.size() << " violation(s)\n";
    for (const auto& v : report.rosser) {
        std::cout << "  block (g" << v.block.start_index << ", g" << v.block.end_index << ") has "
                  << v.block.interval_count << " interval(s) and " << v.block.zero_count
                  << " zero(s); compensated by interval " << comp(v.compensated_by) << "\n";
    }

    if (c.out.empty()) return report.classification.scan.complete ? 0 : 3;
    std::string full;
    if (c.format == Format::json) {
        full += gram_rows(report.classification, Format::json);
        for (const auto& v : report.gram_law) {
            json j;
            j["violation"] = "gram_law";
            j["interval"] = v.index;
            j["zeros"] = v.zero_count;
            j["compensated_by"] = v.compensated_by ? json(*v.compensated_by) : json(nullptr);
            full += j.dump() + "\n";
        }
        for (const auto& v : report.rosser) {
            json j;
            j["violation"] = "rosser";
            j["block_start"] = v.block.start_index;
            j["block_end"] = v.block.end_index;
            j["intervals"] = v.block.interval_count;
            j["zeros"] = v.block.zero_count;
            j["compensated_by"] = v.compensated_by ? json(*v.compensated_by) : json(nullptr);
            full += j.dump() + "\n";
        }
    } else {
        full += gram_rows(report.classification, Format::text);
        full += "\ninterval  zeros\n";
        for (const auto& v : report.gram_law) {
            full += std::to_string(v.index) + "  " + std::to_string(v.zero_count) + "\n";
        }
    }
    emit(c, full);
    return report.classification.scan.complete ? 0 : 3;
}

// s

int run_s(const Common& c, const std::vector<double>& heights, const std::string& gram_range) {
    std::string out;
    if (!gram_range.empty()) {
        const auto [lo, hi] = parse_range<long>(gram_range, "--gram");
        const ZeroScan scan = scan_gram_range(lo, hi, progress_printer(c));
        for (const auto& w : scan.warnings) std::cerr << "warning: " << w << '\n';
        const SExtremes e = s_extremes(scan);
        if (c.format == Format::json) {
            json j;
            j["min_s"] = e.min_s;
            j["t_at_min"] = e.t_at_min;
            j["max_s"] = e.max_s;
            j["t_at_max"] = e.t_at_max;
            out += j.dump() + "\n";
        } else {
            out += "min S = " + fmt("%.6f", e.min_s) + " at t = " + fmt("%.6f", e.t_at_min) + "\n";
            out += "max S = " + fmt("%.6f", e.max_s) + " at t = " + fmt("%.6f", e.t_at_max) + "\n";
        }
        emit(c, out);
        return scan.complete ? 0 : 3;
    }
    if (heights.empty()) throw DomainError("s: give --t or --gram");
    if (c.format != Format::json) out += "T                 N(T)    S(T)\n";
    for (double t : heights) {
        const SReport r = s_of_t(t);
        if (c.format == Format::json) {
            json j;
            j["t"] = r.t;
            j["n"] = r.n_of_t;
            j["s"] = r.s_value;
            j["s_walk"] = r.s_walk;
            out += j.dump() + "\n";
        } else {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-16.6f  %-6ld  %+.9f\n", r.t, r.n_of_t, r.s_walk);
            out += buf;
        }
    }
    emit(c, out);
    return 0;
}

// sigma0

int run_sigma0(const Common& c, int digits) {
    const double s0 = van_de_lune_sigma0(digits);
    if (c.format == Format::json) {
        json j;
        j["sigma0"] = s0;
        j["digits"] = digits;
        emit(c, j.dump() + "\n");
    } else {
        emit(c, fmt("%.16g", s0) + "\n");
    }
    return 0;
}

// xray

struct XrayArgs {
    std::string function = "zeta";
    std::string rect = "-30,10,-10,40";
    double cells_per_unit = 8.0;
    int depth = 5;
    bool labels = false;
    bool point_cloud = false;
    bool gram_points = false;
    bool inventory = false;
};

int run_xray(const Common& c, const XrayArgs& a) {
    const FunctionOracle oracle = make_oracle(a.function);
    const Rectangle rect = parse_rect(a.rect);
    const GridSpec grid = GridSpec::for_rect(rect, a.cells_per_unit, a.depth);
    note(c, "tracing " + a.function + " on a " + std::to_string(grid.nx) + " x " + std::to_string(grid.ny) + " grid");
    const XRay x = trace_xray(oracle, rect, grid);
    for (const auto& d : x.diagnostics) note(c, "note: " + d);

    if (a.inventory || c.format == Format::json) {
        emit(c, curve_inventory(x.curves));
        return 0;
    }
    if (c.format == Format::text) {
        emit(c, point_cloud(x.curves));
        return 0;
    }
    RenderStyle style;
    style.labels = a.labels;
    style.point_cloud = a.point_cloud;
    if (a.gram_points && oracle.kind() == FunctionOracle::Kind::zeta && rect.t_max > 10.0) {
        const long lo = rect.t_min > 10.0 ? gram_index_below(rect.t_min) : -1;
        for (long n = lo;; ++n) {
            const double g = gram_abscissa(n);
            if (g > rect.t_max) break;
            if (0.5 >= rect.sigma_min && 0.5 <= rect.sigma_max) style.gram_points.emplace_back(0.5, g);
        }
    }
    emit(c, render_svg(x.curves, x.singularities, rect, style));
    return 0;
}

// sheet-perm

int run_sheet_perm(const Common& c, int count) {
    const auto perm = sheet_permutation(count);
    std::string out;
    if (c.format == Format::json) {
        json j;
        j["permutation"] = perm;
        out = j.dump() + "\n";
    } else {
        for (std::size_t i = 0; i < perm.size(); ++i) out += (i ? "," : "") + std::to_string(perm[i]);
        out += "\n";
    }
    emit(c, out);
    return 0;
}

void add_common(CLI::App* sub, Common& c, bool allow_svg) {
    std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    if (allow_svg) formats["svg"] = Format::svg;
    sub->add_option("--format", c.format, "Output format: text (table), json (one record per line)" +
                                              std::string(allow_svg ? ", svg" : ""))
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("-o,--out", c.out, "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann zeta evaluation, zero location, Gram audits and X-ray level-set figures.\n"
                 "Gram indices start at -1 (g_-1 ~ 9.667). Index ranges lo..hi include lo and exclude hi;\n"
                 "t ranges lo..hi include both ends. Exit status: 0 success, 2 domain or range error,\n"
                 "3 numerical non-convergence or incomplete zero census."};
    app.require_subcommand(1);
    Common c;
    app.add_option("--threads", c.threads, "Cap on worker threads (default: all)")->check(CLI::NonNegativeNumber);
    app.add_flag("-q,--quiet", c.quiet, "Suppress progress and notes on standard error");

    std::string s_text;
    std::string method = "auto";
    double target = 1e-12;
    auto* eval = app.add_subcommand("eval", "Evaluate zeta(s).\n"
                                            "json fields: sigma, t, re, im, method, error_bound, best_effort");
    eval->add_option("--s", s_text, "Argument, e.g. 2+0i or 0.5+14.1347i")->required();
    eval->add_option("--method", method, "auto, em, rs (needs Re s = 1/2) or series (needs Re s > 1)")
        ->check(CLI::IsMember({"auto", "em", "rs", "series"}));
    eval->add_option("--target", target, "Absolute accuracy target")->check(CLI::PositiveNumber);
    add_common(eval, c, false);

    std::string t_range = "10..100";
    std::string gram_range;
    auto* zeros = app.add_subcommand("zeros", "Locate critical-line zeros by sign changes of Z.\n"
                                              "json fields: ordinal, t, bracket_lo, bracket_hi");
    zeros->add_option("--t", t_range, "Height range lo..hi (inclusive, lo >= 10)");
    zeros->add_option("--gram", gram_range, "Gram interval range lo..hi (indices from -1, hi excluded)");
    add_common(zeros, c, false);

    std::string gram_list;
    auto* gram = app.add_subcommand("gram", "List Gram points g_n with Z(g_n) and good/bad quality.\n"
                                            "json fields: index, t, z, quality");
    gram->add_option("--gram", gram_list, "Index range lo..hi (indices from -1, hi excluded)")->required();
    add_common(gram, c, false);

    std::string audit_range;
    auto* audit = app.add_subcommand("audit", "Audit Gram's law and Rosser's rule. A violation summary goes to\n"
                                              "standard output; --out receives the full report.\n"
                                              "json fields (points): index, t, z, quality, block\n"
                                              "json fields (violations): violation, interval | block_start,\n"
                                              "block_end, intervals, zeros, compensated_by");
    audit->add_option("--gram", audit_range, "Interval range lo..hi (indices from -1, hi excluded)")->required();
    add_common(audit, c, false);

    std::vector<double> s_heights;
    std::string s_gram;
    auto* s_cmd = app.add_subcommand("s", "S(T) = N(T) - theta(T)/pi - 1 by the argument walk, or its extremes\n"
                                           "over a Gram range.\n"
                                           "json fields: t, n, s, s_walk | min_s, t_at_min, max_s, t_at_max");
    s_cmd->add_option("--t", s_heights, "Heights T >= 10");
    s_cmd->add_option("--gram", s_gram, "Gram range lo..hi for min and max of S");
    add_common(s_cmd, c, false);

    int digits = 14;
    auto* sigma0 = app.add_subcommand("sigma0", "The van de Lune constant: sum_p arcsin(p^-sigma) = pi/2.\n"
                                                "json fields: sigma0, digits");
    sigma0->add_option("--digits", digits, "Significant digits (1..14)")->check(CLI::Range(1, 14));
    add_common(sigma0, c, false);

    XrayArgs xa;
    auto* xray = app.add_subcommand("xray", "Trace Re f = 0 (thin) and Im f = 0 (thick) over a rectangle.\n"
                                            "svg: the figure. text: 'sigma t kind' per vertex.\n"
                                            "json: one record per curve with fields kind, number,\n"
                                            "crossing_numbers, closed, truncated, points, start, end,\n"
                                            "singularities");
    xray->add_option("--function", xa.function, "zeta, hermite7, bessel_j7, airy_ai, gamma or poly:c0,c1,...");
    xray->add_option("--rect", xa.rect, "sigma_min,sigma_max,t_min,t_max");
    xray->add_option("--cells-per-unit", xa.cells_per_unit, "Grid density")->check(CLI::PositiveNumber);
    xray->add_option("--depth", xa.depth, "Refinement depth for ambiguous cells (0..8)")->check(CLI::Range(0, 8));
    xray->add_flag("--labels", xa.labels, "Write line numbers at sigma = -1 (zeta)");
    xray->add_flag("--point-cloud", xa.point_cloud, "Draw vertices as dots");
    xray->add_flag("--gram-points", xa.gram_points, "Mark Gram points on the critical line (zeta)");
    xray->add_flag("--inventory", xa.inventory, "Write the curve inventory instead of a figure");
    add_common(xray, c, true);
    c.format = Format::text;

    int perm_count = 20;
    auto* perm = app.add_subcommand("sheet-perm", "Ordinal of the zero on the sheet through each Gram point\n"
                                                  "g_-1, g_0, ...\njson fields: permutation");
    perm->add_option("--count", perm_count, "Number of terms")->check(CLI::Range(1, 2000));
    add_common(perm, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (c.threads > 0) omp_set_num_threads(c.threads);
    if (xray->parsed() && !xray->count("--format")) c.format = Format::svg;

    try {
        if (eval->parsed()) return run_eval(c, s_text, method, target);
        if (zeros->parsed()) return run_zeros(c, t_range, gram_range);
        if (gram->parsed()) return run_gram(c, gram_list);
        if (audit->parsed()) return run_audit(c, audit_range);
        if (s_cmd->parsed()) return run_s(c, s_heights, s_gram);
        if (sigma0->parsed()) return run_sigma0(c, digits);
        if (xray->parsed()) return run_xray(c, xa);
        if (perm->parsed()) return run_sheet_perm(c, perm_count);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
