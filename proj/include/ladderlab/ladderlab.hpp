#pragma once

// ladderlab: frequency-domain analysis of recursive R-L ladder networks,
// from series-parallel circuit trees down to the discrete diffusion line
// they realize. Header-only; everything lives in namespace ladderlab.

#include "admittance.hpp"
#include "circuit.hpp"
#include "component.hpp"
#include "diffusion.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "format.hpp"
#include "fractal.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sweep.hpp"
#include "types.hpp"
