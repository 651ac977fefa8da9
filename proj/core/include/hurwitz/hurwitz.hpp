#pragma once

#include "hurwitz/curves.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/exact_arith.hpp"
#include "hurwitz/formulas.hpp"
#include "hurwitz/matrix_m.hpp"
#include "hurwitz/monodromy.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/report.hpp"
