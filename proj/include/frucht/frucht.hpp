#pragma once

#include "aut.hpp"
#include "cayley.hpp"
#include "errors.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "group.hpp"
#include "order_codec.hpp"
#include "parallel.hpp"
#include "perm.hpp"
#include "rcpg.hpp"
#include "rg_probe.hpp"
