#pragma once

#include "bcs/circular_arc.hpp"
#include "bcs/error.hpp"
#include "bcs/fpt.hpp"
#include "bcs/generators.hpp"
#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"
#include "bcs/interval.hpp"
#include "bcs/io.hpp"
#include "bcs/oracle.hpp"
#include "bcs/permutation.hpp"
#include "bcs/reductions.hpp"
#include "bcs/steiner.hpp"
