#pragma once

// Everything except the command line front end.

#include "nestlab/algebra.hpp"
#include "nestlab/conjugacy.hpp"
#include "nestlab/embedding.hpp"
#include "nestlab/error.hpp"
#include "nestlab/lift.hpp"
#include "nestlab/pisom.hpp"
#include "nestlab/structure.hpp"
#include "nestlab/system.hpp"
