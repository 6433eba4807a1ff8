#pragma once

#include "grlie/betti.hpp"
#include "grlie/module.hpp"

namespace grlie {

// Ext^{i,j}(M, F) for j <= bound from the dualized Bar complex
// ... -> A (x) A_+^{(x)i} (x) M -> ... -> A (x) M -> 0.
// Independent of the minimal-resolution path; used as its oracle.
// Throws CapError when the accumulated Bar basis size exceeds `cap`.
BettiTable bar_ext_oracle(const TruncatedModule& m, int bound,
                          std::int64_t cap = 2'000'000);

}  // namespace grlie
