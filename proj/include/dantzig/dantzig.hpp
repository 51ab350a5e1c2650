#pragma once

#include "dantzig/exactmath.hpp"
#include "dantzig/graph.hpp"
#include "dantzig/grevlex.hpp"
#include "dantzig/grlex.hpp"
#include "dantzig/io.hpp"
#include "dantzig/labels.hpp"
#include "dantzig/oracle.hpp"
#include "dantzig/orders.hpp"
#include "dantzig/polytope.hpp"
