#pragma once

#include "zetaxray/types.hpp"

namespace zx {

/// Principal branch of log Gamma, continuous on the cut plane and real on the
/// positive axis. Shifts the argument right by the recurrence
/// log G(s) = log G(s+k) - sum_{j<k} log(s+j) until Re(s+k) >= 12, then sums
/// the Stirling series. Throws PoleError at nonpositive integers.
EvalResult log_gamma(ComplexPoint s);

/// Same as log_gamma, with an explicit minimum shift depth; used to check the
/// recurrence against itself.
EvalResult log_gamma_shifted(ComplexPoint s, int min_shift);

}  // namespace zx
