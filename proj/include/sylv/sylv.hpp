#pragma once

#include "sylv/errors.hpp"
#include "sylv/exact_math.hpp"
#include "sylv/representability.hpp"
#include "sylv/gaps.hpp"
#include "sylv/sylvester_sums.hpp"
#include "sylv/identities.hpp"
#include "sylv/serialize.hpp"
#include "sylv/bench.hpp"
