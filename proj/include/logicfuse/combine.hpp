// Generates the combined calculus from a host calculus and an identified
// translation: all host schemas verbatim, prop-translation rules for the
// surviving source symbols (only when the prop families differ), and a
// left/right unfolding pair for every source-only constructor.

#pragma once

#include "logicfuse/sequent.hpp"
#include "logicfuse/translation.hpp"

namespace logicfuse {

// Throws std::invalid_argument when the host calculus is not over the
// combination's renamed host signature.
GentzenCalculus combine_calculus(const GentzenCalculus& host, const Combination& comb);

}  // namespace logicfuse
