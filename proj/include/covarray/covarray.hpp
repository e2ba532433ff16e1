#pragma once

#include "covarray/array.hpp"
#include "covarray/common.hpp"
#include "covarray/construct.hpp"
#include "covarray/coverage.hpp"
#include "covarray/geometry.hpp"
#include "covarray/gf.hpp"
#include "covarray/verify.hpp"
#include "covarray/tables.hpp"
