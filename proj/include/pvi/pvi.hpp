#ifndef PVI_PVI_HPP
#define PVI_PVI_HPP

// Umbrella header.

#include "pvi/bipoly.hpp"
#include "pvi/errors.hpp"
#include "pvi/families.hpp"
#include "pvi/heun.hpp"
#include "pvi/hypergeometric.hpp"
#include "pvi/linalg.hpp"
#include "pvi/painleve.hpp"
#include "pvi/parser.hpp"
#include "pvi/poly.hpp"
#include "pvi/quadratic.hpp"
#include "pvi/ratfunc.hpp"
#include "pvi/rational.hpp"
#include "pvi/scalar.hpp"
#include "pvi/serialize.hpp"

#endif
