#pragma once

#include "superrad/collective.hpp"
#include "superrad/emitters.hpp"
#include "superrad/presets.hpp"
#include "superrad/propagator.hpp"
#include "superrad/quadrature.hpp"
#include "superrad/ring.hpp"
#include "superrad/scenario.hpp"
#include "superrad/specfun.hpp"
#include "superrad/version.hpp"
