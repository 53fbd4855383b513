#pragma once

#include "nalg/core.hpp"
#include "nalg/tribracket.hpp"
#include "nalg/product.hpp"
#include "nalg/algebra.hpp"
#include "nalg/algebra_io.hpp"
#include "nalg/enumeration.hpp"
#include "nalg/diagram.hpp"
#include "nalg/corpus.hpp"
#include "nalg/coloring.hpp"
#include "nalg/moves.hpp"
#include "nalg/demo.hpp"
