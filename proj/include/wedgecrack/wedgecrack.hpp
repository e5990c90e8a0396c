#pragma once

// Umbrella header: stress intensity factors, displacement-jump densities,
// and energy release rates for edge and internal cracks along a side of an
// elastic wedge, by Wiener-Hopf / Khrapkov matrix factorization, with an
// independent singular-integral-equation oracle for the half-plane case.

#include "wedgecrack/cache.hpp"
#include "wedgecrack/common.hpp"
#include "wedgecrack/edge.hpp"
#include "wedgecrack/factor.hpp"
#include "wedgecrack/halfplane.hpp"
#include "wedgecrack/internal.hpp"
#include "wedgecrack/kernels.hpp"
#include "wedgecrack/oracle.hpp"
#include "wedgecrack/quadrature.hpp"
#include "wedgecrack/roots.hpp"
#include "wedgecrack/specfun.hpp"
