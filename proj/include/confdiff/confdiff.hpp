#pragma once

#include "confdiff/analysis.hpp"
#include "confdiff/diffusion.hpp"
#include "confdiff/error.hpp"
#include "confdiff/generators.hpp"
#include "confdiff/graph.hpp"
#include "confdiff/graph_json.hpp"
#include "confdiff/matrix_io.hpp"
#include "confdiff/monte_carlo.hpp"
#include "confdiff/rng.hpp"
