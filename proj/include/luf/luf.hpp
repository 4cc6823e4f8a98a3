#pragma once

// Everything: graphs and I/O, oracles, decompositions, the recognizer,
// splitters and the coloring.

#include "luf/basics.hpp"
#include "luf/coloring.hpp"
#include "luf/compose.hpp"
#include "luf/constraint.hpp"
#include "luf/decomp.hpp"
#include "luf/error.hpp"
#include "luf/generate.hpp"
#include "luf/graph.hpp"
#include "luf/io.hpp"
#include "luf/named.hpp"
#include "luf/oracle.hpp"
#include "luf/petersen.hpp"
#include "luf/recipe.hpp"
#include "luf/recognizer.hpp"
#include "luf/splitter.hpp"
