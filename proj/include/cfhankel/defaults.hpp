#pragma once

#include "cfhankel/closedform.hpp"

namespace cfh {

/// Convention chosen by the arbitration run executed during the build.
Convention shipped_convention() noexcept;

}  // namespace cfh
