#pragma once

#include "clebsch/algebra.hpp"
#include "clebsch/coefficients.hpp"
#include "clebsch/detail.hpp"
#include "clebsch/linalg.hpp"
#include "clebsch/littlewood.hpp"
#include "clebsch/patterns.hpp"
#include "clebsch/table_io.hpp"
#include "clebsch/verify.hpp"
#include "clebsch/weights.hpp"
