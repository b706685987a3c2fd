#pragma once

#include "rankcodes/codespec.hpp"
#include "rankcodes/errors.hpp"
#include "rankcodes/gabidulin.hpp"
#include "rankcodes/gf.hpp"
#include "rankcodes/linpoly.hpp"
#include "rankcodes/oracle.hpp"
#include "rankcodes/rank_metric.hpp"
#include "rankcodes/twisted.hpp"
#include "rankcodes/version.hpp"
