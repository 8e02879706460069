#include "cfhankel/defaults.hpp"

#include "cfhankel/arbitrated_convention.hpp"

namespace cfh {

Convention shipped_convention() noexcept { return kArbitratedConvention; }

}  // namespace cfh
