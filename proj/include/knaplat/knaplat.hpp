#pragma once

#include "knaplat/babai.hpp"
#include "knaplat/bounds.hpp"
#include "knaplat/gen.hpp"
#include "knaplat/hnf.hpp"
#include "knaplat/io.hpp"
#include "knaplat/lattice.hpp"
#include "knaplat/linalg.hpp"
#include "knaplat/lll.hpp"
#include "knaplat/lp.hpp"
#include "knaplat/minima.hpp"
#include "knaplat/numeric.hpp"
#include "knaplat/oracles.hpp"
#include "knaplat/rng.hpp"
#include "knaplat/solver.hpp"
