#pragma once

#include "pvi/asymptotics.hpp"
#include "pvi/chazy.hpp"
#include "pvi/errors.hpp"
#include "pvi/fuchsian.hpp"
#include "pvi/mat2.hpp"
#include "pvi/monodromy.hpp"
#include "pvi/monodromy_numeric.hpp"
#include "pvi/ode.hpp"
#include "pvi/pvi.hpp"
#include "pvi/rep.hpp"
#include "pvi/specfun.hpp"
#include "pvi/symmetry.hpp"
