#pragma once

#include "metacyclic/arith.hpp"
#include "metacyclic/engine.hpp"
#include "metacyclic/enumerate.hpp"
#include "metacyclic/invariants.hpp"
#include "metacyclic/minimize.hpp"
#include "metacyclic/oracle.hpp"
#include "metacyclic/units.hpp"
