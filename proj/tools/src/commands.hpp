#pragma once

#include "options.hpp"

namespace fracpow::cli {

int run_nodes(const RunConfig& cfg);
int run_scalar(const RunConfig& cfg);
int run_operator(const RunConfig& cfg);
int run_estimate(const RunConfig& cfg);
int run_figure(const RunConfig& cfg);

}  // namespace fracpow::cli
