#pragma once

/// Umbrella header for the subblock-bounds library.

#include "sbb/asymptotics.hpp"
#include "sbb/combinatorics.hpp"
#include "sbb/core.hpp"
#include "sbb/cscc.hpp"
#include "sbb/exact.hpp"
#include "sbb/lp.hpp"
#include "sbb/oracle.hpp"
#include "sbb/orbits.hpp"
#include "sbb/secc.hpp"
