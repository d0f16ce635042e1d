#pragma once

// Umbrella header.

#include "arrinv/arrangement.hpp"
#include "arrinv/bernstein.hpp"
#include "arrinv/errors.hpp"
#include "arrinv/generator.hpp"
#include "arrinv/invariants.hpp"
#include "arrinv/io.hpp"
#include "arrinv/lattice.hpp"
#include "arrinv/matrix.hpp"
#include "arrinv/polynomial.hpp"
#include "arrinv/rational.hpp"
#include "arrinv/verify.hpp"
