#pragma once

// Umbrella header: weighted-sample moment inequalities, eigenvalue spread
// bounds, polynomial span bounds, and the oracles that verify them.

#include "momentbounds/errors.hpp"
#include "momentbounds/fuzz.hpp"
#include "momentbounds/inequalities.hpp"
#include "momentbounds/matrix.hpp"
#include "momentbounds/moments.hpp"
#include "momentbounds/oracle/generators.hpp"
#include "momentbounds/oracle/jacobi.hpp"
#include "momentbounds/oracle/sturm.hpp"
#include "momentbounds/polynomial.hpp"
#include "momentbounds/report.hpp"
#include "momentbounds/sample.hpp"
#include "momentbounds/span.hpp"
#include "momentbounds/spread.hpp"
