#pragma once

#include "slr/partition.hpp"
#include "slr/tableau.hpp"
#include "slr/insertion.hpp"
#include "slr/words.hpp"
#include "slr/lr.hpp"
#include "slr/oracles.hpp"
#include "slr/cache.hpp"
#include "slr/bench.hpp"
