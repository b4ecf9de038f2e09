#pragma once

// Convenience umbrella for the whole library.

#include "latdec/act.hpp"
#include "latdec/allais.hpp"
#include "latdec/error.hpp"
#include "latdec/lattice.hpp"
#include "latdec/lottery.hpp"
#include "latdec/oracle.hpp"
#include "latdec/partition.hpp"
#include "latdec/problem.hpp"
#include "latdec/rational.hpp"
#include "latdec/report.hpp"
#include "latdec/valuation.hpp"
