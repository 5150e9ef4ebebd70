#pragma once

// Umbrella header: exact GF(p) linear algebra, p-groups, F_p[G]-modules,
// Heller shifts, group cohomology, decomposition verifiers, diagrams, and
// the Artin-Schreier realization. JSON I/O lives in json_io.hpp.

#include "artin_schreier.hpp"
#include "cohomology.hpp"
#include "decomp.hpp"
#include "diagram.hpp"
#include "fp.hpp"
#include "gmodule.hpp"
#include "heller.hpp"
#include "pgroup.hpp"
