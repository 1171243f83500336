#pragma once
// Umbrella header.

#include "edwing/config.hpp"
#include "edwing/error.hpp"
#include "edwing/geometry.hpp"
#include "edwing/materials.hpp"
#include "edwing/numeric.hpp"
#include "edwing/performance.hpp"
#include "edwing/pipeline.hpp"
#include "edwing/report.hpp"
#include "edwing/sizing.hpp"
#include "edwing/structure.hpp"
#include "edwing/tail.hpp"
#include "edwing/tiling.hpp"
#include "edwing/units.hpp"
