#pragma once

/// Umbrella header.

#include "continued_fraction.hpp"
#include "decimal.hpp"
#include "oracle.hpp"
#include "planner.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "recovery.hpp"
#include "sweep.hpp"
#include "version.hpp"
