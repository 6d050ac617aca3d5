#pragma once

// Umbrella header for the cooperative envy-free division toolkit.

#include "cakecut/geometry.hpp"
#include "cakecut/config.hpp"
#include "cakecut/symmetry.hpp"
#include "cakecut/prefs.hpp"
#include "cakecut/chess.hpp"
#include "cakecut/solver.hpp"
#include "cakecut/sampling.hpp"
#include "cakecut/serialization.hpp"
#include "cakecut/demos.hpp"
