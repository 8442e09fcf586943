#pragma once

#include "greedyspan/analysis.hpp"
#include "greedyspan/baselines.hpp"
#include "greedyspan/cone.hpp"
#include "greedyspan/delta_greedy.hpp"
#include "greedyspan/experiment.hpp"
#include "greedyspan/geometry.hpp"
#include "greedyspan/graph.hpp"
#include "greedyspan/io.hpp"
#include "greedyspan/lazy_schedule.hpp"
#include "greedyspan/mst.hpp"
#include "greedyspan/pair_schedule.hpp"
#include "greedyspan/point_grid.hpp"
#include "greedyspan/random_points.hpp"
#include "greedyspan/run_report.hpp"
#include "greedyspan/shortest_path.hpp"
