#ifndef CUBINV_CUBINV_HPP
#define CUBINV_CUBINV_HPP

// Exact-arithmetic invariants of cubic surfaces: Aronhold invariants of
// ternary cubics by transvection, their transfers to contravariants of
// quaternary cubics, the differential-pairing chain producing the
// Clebsch-Salmon invariants and Salmon's linear covariants, the dual
// surface, and the pentahedral closed-form oracle.

#include "actions.hpp"
#include "differential.hpp"
#include "errors.hpp"
#include "graded_form.hpp"
#include "matrix.hpp"
#include "parser.hpp"
#include "pentahedral.hpp"
#include "pipeline.hpp"
#include "polynomial.hpp"
#include "prng.hpp"
#include "rational.hpp"
#include "selfcheck.hpp"
#include "transfer.hpp"
#include "transvection.hpp"
#include "varspace.hpp"

#endif
