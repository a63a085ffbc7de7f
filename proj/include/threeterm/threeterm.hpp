#pragma once

#include "errors.hpp"
#include "relations.hpp"
#include "hyperbolic.hpp"
#include "horocycle.hpp"
#include "grassmann.hpp"
#include "measurements.hpp"
#include "render.hpp"
