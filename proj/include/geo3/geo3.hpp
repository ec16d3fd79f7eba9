// geo3/geo3.hpp — umbrella header: the whole library except the CLI driver.
#pragma once

#include "geo3/catalog.hpp"
#include "geo3/curve.hpp"
#include "geo3/error.hpp"
#include "geo3/expr.hpp"
#include "geo3/geodesic.hpp"
#include "geo3/integrate.hpp"
#include "geo3/jet.hpp"
#include "geo3/models.hpp"
#include "geo3/ode.hpp"
#include "geo3/report.hpp"
#include "geo3/strip.hpp"
#include "geo3/surface.hpp"
#include "geo3/vec.hpp"
