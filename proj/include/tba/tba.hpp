#pragma once

#include "tba/rational.hpp"
#include "tba/kernel.hpp"
#include "tba/polygon.hpp"
#include "tba/arrangement.hpp"
#include "tba/subdivision.hpp"
#include "tba/validator.hpp"
#include "tba/schema.hpp"
#include "tba/generate.hpp"
#include "tba/classify.hpp"
#include "tba/hexagrid.hpp"
#include "tba/duality.hpp"
#include "tba/io.hpp"
#include "tba/fuzz.hpp"
