#pragma once

#include "bepoly/rational.hpp"
#include "bepoly/gauss_rational.hpp"
#include "bepoly/polynomial.hpp"
#include "bepoly/special_poly.hpp"
#include "bepoly/series.hpp"
#include "bepoly/expr.hpp"
#include "bepoly/parser.hpp"
#include "bepoly/eval.hpp"
#include "bepoly/report.hpp"
#include "bepoly/catalog.hpp"
