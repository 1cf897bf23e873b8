#pragma once

#include "cplxmine/types.hpp"
#include "cplxmine/dataset.hpp"
#include "cplxmine/comparator.hpp"
#include "cplxmine/miner.hpp"
#include "cplxmine/trend.hpp"
#include "cplxmine/pipeline.hpp"
