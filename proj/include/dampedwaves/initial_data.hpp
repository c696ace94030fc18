#pragma once

#include "dampedwaves/config.hpp"
#include "dampedwaves/evolution.hpp"

namespace dw {

// builds (h0, xi0) from the preset; deterministic in cfg.seed
SimState make_initial(const RunConfig& cfg);

}  // namespace dw
