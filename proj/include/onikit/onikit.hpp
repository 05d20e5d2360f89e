#pragma once

#include "onikit/complex.hpp"
#include "onikit/error.hpp"
#include "onikit/fixtures.hpp"
#include "onikit/graph.hpp"
#include "onikit/gvd.hpp"
#include "onikit/ideal.hpp"
#include "onikit/json_io.hpp"
#include "onikit/reference_checks.hpp"
#include "onikit/universe.hpp"
