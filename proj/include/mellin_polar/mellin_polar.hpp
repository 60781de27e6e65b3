#pragma once

#include "error.hpp"
#include "stirling.hpp"
#include "polar_core.hpp"
#include "numerics.hpp"
#include "function_library.hpp"
#include "contour_engine.hpp"
#include "sampling_ops.hpp"
#include "experiment.hpp"
