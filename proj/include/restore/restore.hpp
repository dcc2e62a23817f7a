#pragma once

#include "restore/error.hpp"
#include "restore/model.hpp"
#include "restore/schedule.hpp"
#include "restore/seq_opt.hpp"
#include "restore/simplex.hpp"
#include "restore/lp.hpp"
#include "restore/algos.hpp"
#include "restore/oracle.hpp"
#include "restore/io.hpp"
#include "restore/generator.hpp"
#include "restore/bench.hpp"
