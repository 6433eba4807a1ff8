#pragma once

#include "grlie/betti.hpp"
#include "grlie/module.hpp"

namespace grlie {

// Betti numbers b[i][j] = dim Ext^{i,j}(M, F) from a minimal graded free
// resolution, built step by step: the i-th generator space is the degreewise
// complement of A_+ * (i-th syzygy) inside the syzygy, with lifts chosen by
// the deterministic complement rule. Exact for all j <= M.bound() since
// degree-j syzygy generators only involve lower degrees.
BettiTable minimal_resolution(const TruncatedModule& m);

}  // namespace grlie
