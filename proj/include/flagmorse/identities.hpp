// Randomized checks of the pointwise bracket, connection and hessian
// identities on a frame.
#pragma once

#include "flagmorse/frame.hpp"
#include "flagmorse/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flagmorse {

/// integrability, mel, onemel, twomel, curvature, ceh-chain.
const std::vector<std::string>& suite_names();

/// Runs a named suite (or "all") over `trials` inputs derived from `seed`.
/// Trials are spread over `threads` workers (0: FLAGMORSE_THREADS or the
/// hardware count); results do not depend on the thread count. Throws
/// UnknownSuite.
Report identity_suite(const RealFormFrame& frame, const std::string& suite, long trials, std::uint64_t seed,
                      int threads = 0);

/// Worker count from FLAGMORSE_THREADS, defaulting to the hardware count.
int default_threads();

std::string frame_name(const RealFormFrame& frame);

}  // namespace flagmorse
