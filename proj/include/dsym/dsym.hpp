#pragma once

/*
 * dsym.hpp
 * --------
 * Umbrella header: exact symbolic computation in the ring of double
 * symmetric functions and its dual ring of formal series.  Includes the
 * whole library; individual headers can also be included directly.
 */

#include "rational.hpp"
#include "apoly.hpp"
#include "xpoly.hpp"
#include "partition.hpp"
#include "tableaux.hpp"
#include "double_schur.hpp"
#include "basis.hpp"
#include "dual_series.hpp"
#include "duallr.hpp"
#include "transition.hpp"
#include "verify.hpp"
