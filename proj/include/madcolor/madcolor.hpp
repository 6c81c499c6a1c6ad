#pragma once

// Umbrella header for the madcolor library: exact maximum average degree,
// (1,...,1,0,...,0)-colorability, and the layer/discharging audit toolkit.

#include "madcolor/bounds.hpp"
#include "madcolor/coloring.hpp"
#include "madcolor/densest.hpp"
#include "madcolor/discharge.hpp"
#include "madcolor/generators.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/graph_io.hpp"
#include "madcolor/hunt.hpp"
#include "madcolor/layers.hpp"
#include "madcolor/lemma2.hpp"
#include "madcolor/max_flow.hpp"
#include "madcolor/peel.hpp"
#include "madcolor/proof_solver.hpp"
#include "madcolor/rational.hpp"
#include "madcolor/solve.hpp"
