#pragma once

#include "taylorhess/algebra/exponent.hpp"
#include "taylorhess/algebra/field.hpp"
#include "taylorhess/algebra/jet.hpp"
#include "taylorhess/algebra/monomial_order.hpp"
#include "taylorhess/algebra/polynomial.hpp"
#include "taylorhess/algebra/prime_field.hpp"
#include "taylorhess/algebra/random.hpp"
#include "taylorhess/algebra/rational.hpp"
#include "taylorhess/algebra/series.hpp"
