#pragma once

#include "posmap/criteria.hpp"
#include "posmap/criterion_spec.hpp"
#include "posmap/errors.hpp"
#include "posmap/hermitian.hpp"
#include "posmap/kraus.hpp"
#include "posmap/majorization.hpp"
#include "posmap/maps.hpp"
#include "posmap/matrix_io.hpp"
#include "posmap/random.hpp"
#include "posmap/scan.hpp"
#include "posmap/states.hpp"
