#pragma once

#include "ekc/errors.hpp"
#include "ekc/graph.hpp"
#include "ekc/onion.hpp"
#include "ekc/candidates.hpp"
#include "ekc/followers.hpp"
#include "ekc/solver.hpp"
#include "ekc/generators.hpp"
#include "ekc/report.hpp"
