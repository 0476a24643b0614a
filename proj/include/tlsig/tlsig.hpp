#pragma once

// Umbrella header for the library (the CLI layer lives in tlsig/cli.hpp).

#include "tlsig/alexander.hpp"
#include "tlsig/analysis.hpp"
#include "tlsig/circleroots.hpp"
#include "tlsig/errors.hpp"
#include "tlsig/gaussian.hpp"
#include "tlsig/hermitian.hpp"
#include "tlsig/linkfile.hpp"
#include "tlsig/matrix.hpp"
#include "tlsig/polynomial.hpp"
#include "tlsig/rational.hpp"
#include "tlsig/seifert.hpp"
#include "tlsig/sturm.hpp"
