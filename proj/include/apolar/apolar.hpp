#pragma once

// Umbrella header: the whole library except the CLI front end.

#include "apolar/apolar_ideal.hpp"
#include "apolar/betti.hpp"
#include "apolar/cayley.hpp"
#include "apolar/field.hpp"
#include "apolar/koszul.hpp"
#include "apolar/linalg.hpp"
#include "apolar/minor_basis.hpp"
#include "apolar/monomial.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/relation.hpp"
#include "apolar/repcheck.hpp"
#include "apolar/symmetry.hpp"
#include "apolar/util.hpp"
