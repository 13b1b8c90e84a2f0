#pragma once

#include "mdd/circuit.hpp"
#include "mdd/complex_table.hpp"
#include "mdd/dense.hpp"
#include "mdd/errors.hpp"
#include "mdd/gates.hpp"
#include "mdd/operations.hpp"
#include "mdd/package.hpp"
#include "mdd/register.hpp"
#include "mdd/rng.hpp"
