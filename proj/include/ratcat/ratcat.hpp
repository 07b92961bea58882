#pragma once

#include "ratcat/arith.hpp"
#include "ratcat/cores.hpp"
#include "ratcat/equiv.hpp"
#include "ratcat/error.hpp"
#include "ratcat/glue.hpp"
#include "ratcat/invset.hpp"
#include "ratcat/lattice.hpp"
#include "ratcat/qtpoly.hpp"
#include "ratcat/serialize.hpp"
#include "ratcat/series.hpp"
#include "ratcat/sweep.hpp"
#include "ratcat/verify.hpp"
