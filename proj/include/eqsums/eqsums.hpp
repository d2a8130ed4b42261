// Umbrella header.
#pragma once

#include "eqsums/arith.hpp"
#include "eqsums/aggregates.hpp"
#include "eqsums/bounds.hpp"
#include "eqsums/counting.hpp"
#include "eqsums/exponents.hpp"
#include "eqsums/nat.hpp"
#include "eqsums/planes.hpp"
#include "eqsums/probe.hpp"
#include "eqsums/report_io.hpp"
#include "eqsums/roots.hpp"
#include "eqsums/scaling.hpp"
#include "eqsums/singular.hpp"
#include "eqsums/triples.hpp"
