#pragma once

#include "hsvc/io.hpp"
#include "hsvc/matching.hpp"
#include "hsvc/reductions.hpp"
#include "hsvc/set_system.hpp"
#include "hsvc/solvers.hpp"
#include "hsvc/vc.hpp"
