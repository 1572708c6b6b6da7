#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetaxray/types.hpp"

namespace zx {

// Gram indices start at -1: g_{-1} ~ 9.667 is the first solution of
// theta(t) = n pi on the increasing branch of theta.

enum class GramQuality { good, bad };

struct GramPoint {
    long index = 0;
    double t = 0.0;
    double z_value = 0.0;  // Z(g_n)
    GramQuality quality = GramQuality::good;
    double residual = 0.0;  // theta(g_n) - n pi
};

/// Largest |theta(g_n) - n pi| accepted from the Newton solve: 1e-9, or a few
/// ulps of n pi once that is coarser than 1e-9 (n > ~1e6).
double gram_residual_tolerance(long n);

/// Newton on theta(t) - n pi seeded by inverting the asymptotic theta.
/// Throws RangeError for n < -1, NumericError if Newton fails in 50 steps.
GramPoint gram_point(long n);

/// Just the abscissa g_n (no Z evaluation).
double gram_abscissa(long n);

/// Index n with g_n <= t < g_{n+1} (t > g_{-1}).
long gram_index_below(double t);

struct ZeroRecord {
    long ordinal = 0;  // 1-based by height
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double t = 0.0;
    double refinement_width = 0.0;
};

/// Zero census of one Gram interval (g_n, g_{n+1}).
struct GramIntervalCensus {
    long index = 0;  // n
    int zero_count = 0;
    int panels = 1;
};

struct ZeroScan {
    std::vector<ZeroRecord> zeros;
    std::vector<GramIntervalCensus> intervals;
    long first_gram = 0;  // fences of the scanned span
    long last_gram = 0;
    long count_at_first = 0;  // N(g_first), N(g_last) from the argument walk
    long count_at_last = 0;
    bool complete = true;
    std::vector<std::string> warnings;
};

/// Locate the critical-line zeros in [t_lo, t_hi] (10 <= t_lo < t_hi).
/// Gram intervals covering the range are scanned for sign changes of Z;
/// intervals without one are split into up to 64 panels. Brackets are
/// bisected to width <= 1e-6. The census is compared with N(T) at the
/// fencing Gram points; on mismatch every interval is rescanned at 128
/// panels, and a remaining mismatch is reported as a warning.
ZeroScan find_zeros(double t_lo, double t_hi);

/// Called with (intervals done, intervals total) every 1000 intervals and at
/// the end. Calls are serialised.
using ProgressFn = std::function<void(long, long)>;

/// The same scan over Gram intervals n_lo .. n_hi - 1 (n_lo >= -1).
ZeroScan scan_gram_range(long n_lo, long n_hi, const ProgressFn& progress = {});
/// Single-threaded reference for scan_gram_range; identical results.
ZeroScan scan_gram_range_serial(long n_lo, long n_hi);

struct SReport {
    double t = 0.0;
    long n_of_t = 0;       // zeros with 0 < gamma <= T
    double s_value = 0.0;  // n_of_t - theta(T)/pi - 1
    double s_walk = 0.0;   // accumulated argument / pi
    int evaluations = 0;
};

/// S(T) by tracking arg zeta(sigma + iT) from sigma = 10 down to 1/2.
/// Requires T >= 10; throws NumericError on step underflow.
SReport s_of_t(double t);

/// Same walk without the T >= 10 restriction (T > 0).
SReport s_walk_unchecked(double t);

/// N(T) = round(theta(T)/pi + 1 + S(T)). Throws DomainError when T lies
/// within 1e-6 of a zero.
long count_N(double t);

struct GramBlock {
    long start_index = 0;  // good fence
    long end_index = 0;    // good fence
    long interval_count = 0;
    int zero_count = 0;
};

struct GramClassification {
    std::vector<GramPoint> points;  // n_lo .. n_hi, plus any fence extension
    std::vector<GramBlock> blocks;
    ZeroScan scan;
};

/// Classify g_{n_lo} .. g_{n_hi} as good/bad and group bad points into Gram
/// blocks. Runs of bad points at either end are followed outward until a good
/// fence is found, so every bad point lands in exactly one block.
GramClassification classify_gram_range(long n_lo, long n_hi, const ProgressFn& progress = {});

struct GramLawViolation {
    long index = 0;  // interval (g_n, g_{n+1})
    int zero_count = 0;
    std::optional<long> compensated_by;  // nearest interval with the opposite imbalance
};

struct RosserViolation {
    GramBlock block;
    std::optional<long> compensated_by;
};

struct AuditReport {
    GramClassification classification;
    std::vector<GramLawViolation> gram_law;
    std::vector<RosserViolation> rosser;
};

AuditReport audit_laws(long n_lo, long n_hi, const ProgressFn& progress = {});

struct SExtremes {
    double min_s = 0.0;
    double t_at_min = 0.0;
    double max_s = 0.0;
    double t_at_max = 0.0;
};

/// Extremes of S(t) over [g_{first}, g_{last}] of a scan, from the fence
/// count and the located zeros. Extremes sit at one-sided limits at zeros.
SExtremes s_extremes(const ZeroScan& scan);

struct ZExtremum {
    double t = 0.0;
    double z = 0.0;
    Method method = Method::euler_maclaurin;
};

/// The extremum of Z between two consecutive zeros a < b (Brent's method).
/// With use_euler_maclaurin the values come from the Euler-Maclaurin
/// evaluation of Z, otherwise from Riemann-Siegel.
ZExtremum z_extremum(double a, double b, bool use_euler_maclaurin = true);

/// Nearest integer to 2t/pi log(t/2pi) - 2t/pi + 1/2: the number of the
/// X-ray line through -1 + it. Requires t > 5.
long line_number(double t);
double line_number_value(double t);

/// Nearest integer to T/2pi log(T/2pi) - T/2pi + 7/8 (zero-free parallel)
/// or + 11/8 (zero-carrying parallel, counting its own zero).
long zeros_below_parallel(double t, bool zero_carrying);

/// sigma_0: root of sum_p arcsin(p^{-sigma}) = pi/2, sigma > 1, to `digits`
/// significant digits (1..14).
double van_de_lune_sigma0(int digits);

/// sum_{p <= p_max} arcsin(p^{-sigma}).
double arcsin_prime_partial_sum(double sigma, long p_max);

/// Full sum over all primes of arcsin(p^{-sigma}) minus pi/2. The primes
/// above the sieve limit are summed through the prime zeta function.
double van_de_lune_function(double sigma);

}  // namespace zx
