#pragma once

#include "echcap/asymptotics.hpp"
#include "echcap/capacities.hpp"
#include "echcap/capacity_sequence.hpp"
#include "echcap/capacity_value.hpp"
#include "echcap/domain.hpp"
#include "echcap/errors.hpp"
#include "echcap/lattice_polygon.hpp"
#include "echcap/norm.hpp"
#include "echcap/obstructions.hpp"
#include "echcap/polygon_enumeration.hpp"
#include "echcap/rational.hpp"
#include "echcap/toric.hpp"
