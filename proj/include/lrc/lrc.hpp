#pragma once

#include "lrc/acceptance.hpp"
#include "lrc/availability.hpp"
#include "lrc/bounds.hpp"
#include "lrc/cosets.hpp"
#include "lrc/covering.hpp"
#include "lrc/equivalence.hpp"
#include "lrc/error.hpp"
#include "lrc/families.hpp"
#include "lrc/gf2.hpp"
#include "lrc/graph.hpp"
#include "lrc/guards.hpp"
#include "lrc/io.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/oracles.hpp"
#include "lrc/polyhedron.hpp"
#include "lrc/search.hpp"
#include "lrc/weights.hpp"
