#pragma once

#include "burn.hpp"
#include "circulant.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "integer_math.hpp"
#include "lex_product.hpp"
#include "neighborhood.hpp"
#include "report.hpp"
#include "solver.hpp"
#include "table.hpp"
#include "vertex_set.hpp"
