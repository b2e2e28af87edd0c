#pragma once

#include "characters.hpp"
#include "error.hpp"
#include "expression.hpp"
#include "exppoly.hpp"
#include "linalg.hpp"
#include "numbers.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "semiinvariants.hpp"
#include "series.hpp"
