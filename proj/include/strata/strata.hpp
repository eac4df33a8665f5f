#pragma once

#include "strata/bounds.hpp"
#include "strata/catalog.hpp"
#include "strata/cli.hpp"
#include "strata/cover.hpp"
#include "strata/error.hpp"
#include "strata/exponents.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/rational.hpp"
#include "strata/serialize.hpp"
#include "strata/stratum.hpp"
