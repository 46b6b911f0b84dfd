#pragma once

// Umbrella header for the whole library.

#include "laurent.hpp"
#include "fraction.hpp"
#include "web.hpp"
#include "matrix.hpp"
#include "evaluate.hpp"
#include "uqaction.hpp"
#include "relations.hpp"
#include "tl.hpp"
#include "jw.hpp"
#include "braid.hpp"
#include "dsl.hpp"
