#pragma once

// Umbrella header: exact integer combinatorics for deciding whether a set of
// same-degree monomials defines a map birational onto its image, and for
// classifying monomial Cremona sets at small scale.

#include "monocrem/bigint.hpp"
#include "monocrem/core.hpp"
#include "monocrem/cremona.hpp"
#include "monocrem/decide.hpp"
#include "monocrem/error.hpp"
#include "monocrem/exactla.hpp"
#include "monocrem/matrix.hpp"
#include "monocrem/parse.hpp"
#include "monocrem/polymatroid.hpp"
#include "monocrem/termmat.hpp"
