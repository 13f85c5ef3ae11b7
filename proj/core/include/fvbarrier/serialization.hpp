#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "fvbarrier/barrier_graph.hpp"
#include "fvbarrier/grid_deploy.hpp"
#include "fvbarrier/line_model.hpp"
#include "fvbarrier/simulation.hpp"

// JSON shapes used by the command-line tool. Floats are rounded to 9 significant
// digits on output. Parse failures and missing fields raise InvalidArgument.
//
//   camera:   {"id", "x", "y", "facing", "r", "phi", "theta"}   (facing in radians)
//   plan:     {"grid": {"width","height","d","m","n","cells":[{"row","col","cameras"}]},
//              "heads": [{"row","col","head"}],
//              "vertices": [{"row","col","cameras","down","up","silent"}],
//              "cameras": [{"id","origin":{"x","y"},"cell":[i,j],"vertex":[i,j],
//                           "travel","orientation","final":camera}],
//              "vertex_deficits": [{"row","col","missing"}],
//              "deficient_cells": [[i,j], ...], "exceeds_length_bound"}
//   graph:    {"m","n","nodes":["s","t",[i,j],...],"edges":[{"u","v","weight","kind"}]}
//   barrier:  {"exists","weight","path":[[i,j],...],"distinct_cameras"}
//   scenario: {"width","height","r","theta","phi","counts","trials","seed","mode","samples"}

namespace fvbarrier {

/// Rounds to 9 significant digits so the emitted JSON carries at most that many.
double round9(double value);

nlohmann::json to_json(const CameraPose& camera);
CameraPose camera_from_json(const nlohmann::json& j);

nlohmann::json cameras_to_json(const std::vector<CameraPose>& cameras);
/// Accepts either a bare array or an object with a "cameras" array.
std::vector<CameraPose> cameras_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LineDeployment& deployment, const LineValidation& validation);

nlohmann::json to_json(const DeploymentPlan& plan);
DeploymentPlan plan_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoverageGraph& graph);
nlohmann::json to_json(const BarrierResult& result);

nlohmann::json to_json(const ScenarioConfig& config);
/// Missing fields keep their defaults; unknown fields are rejected.
ScenarioConfig scenario_from_json(const nlohmann::json& j);

}  // namespace fvbarrier
