#pragma once

#include "projew/errors.hpp"
#include "projew/exactmath/linalg.hpp"
#include "projew/exactmath/mpoly.hpp"
#include "projew/exactmath/ratfunc.hpp"
#include "projew/exactmath/rational.hpp"
#include "projew/exactmath/unipoly.hpp"
#include "projew/exprparse/parser.hpp"
#include "projew/exprparse/structure.hpp"
#include "projew/geometry/connection.hpp"
#include "projew/geometry/curvature.hpp"
#include "projew/geometry/tensor.hpp"
#include "projew/obstruction/report.hpp"
#include "projew/obstruction/resultants.hpp"
#include "projew/pipeline/branches.hpp"
#include "projew/pipeline/invariants.hpp"
