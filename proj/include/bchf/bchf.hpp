#pragma once
// Umbrella header for the BC hypergeometric Fourier transform library.

#include "types.hpp"
#include "weyl.hpp"
#include "gamma.hpp"
#include "gamma_product.hpp"
#include "series.hpp"
#include "cfunction.hpp"
#include "hypergeom.hpp"
#include "quadrature.hpp"
#include "spectrum.hpp"
#include "rank1.hpp"
#include "transform.hpp"
