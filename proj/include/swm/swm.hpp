#pragma once

#include "swm/chebyshev.hpp"
#include "swm/connection.hpp"
#include "swm/dfint.hpp"
#include "swm/dfint_checks.hpp"
#include "swm/fuchsian.hpp"
#include "swm/fusion.hpp"
#include "swm/laurent.hpp"
#include "swm/rational.hpp"
#include "swm/repdata.hpp"
