#pragma once

#include <map>
#include <string>
#include <vector>

#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"
#include "sfp/pricing.hpp"

namespace sfp {

// Named benchmark scenarios. Each bundles a model, a contract and a spot;
// scenarios published as curves also carry their default grid.
struct Preset {
    ModelSpec model;
    Contract contract;
    double spot;
    CurveAxis axis = CurveAxis::Strike;
    double grid_lo = 0.0; // grid_n == 0 means the scenario is a single point
    double grid_hi = 0.0;
    int grid_n = 0;
    int default_terms = 64;
};

const std::map<std::string, Preset>& presets();

// Throws InvalidParameter with the list of known names on a miss.
const Preset& preset(const std::string& name);

// Uniform grid helper: n >= 2 points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, int n);

} // namespace sfp
