#pragma once

#include "firefront/error.hpp"
#include "firefront/expression.hpp"
#include "firefront/frames.hpp"
#include "firefront/front_tracking.hpp"
#include "firefront/geom.hpp"
#include "firefront/huygens.hpp"
#include "firefront/io/ascii_grid.hpp"
#include "firefront/io/calibration_csv.hpp"
#include "firefront/io/csv.hpp"
#include "firefront/io/fronts_csv.hpp"
#include "firefront/io/geojson.hpp"
#include "firefront/io/hotspots.hpp"
#include "firefront/io/svg.hpp"
#include "firefront/io/time.hpp"
#include "firefront/least_squares.hpp"
#include "firefront/lfmc.hpp"
#include "firefront/pipeline.hpp"
#include "firefront/polygon_union.hpp"
#include "firefront/projection.hpp"
#include "firefront/ros_correction.hpp"
#include "firefront/ros_kernel.hpp"
#include "firefront/run_result.hpp"
#include "firefront/scenario.hpp"
