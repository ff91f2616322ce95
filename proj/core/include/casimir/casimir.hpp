#pragma once

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/format.hpp"
#include "casimir/geometry.hpp"
#include "casimir/optimize.hpp"
#include "casimir/periodic.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/sweep.hpp"
#include "casimir/wing_force.hpp"
