#pragma once

// Umbrella header.

#include "superlie/algebra.hpp"
#include "superlie/capability.hpp"
#include "superlie/catalog.hpp"
#include "superlie/errors.hpp"
#include "superlie/formulas.hpp"
#include "superlie/free_algebra.hpp"
#include "superlie/grading.hpp"
#include "superlie/hopf.hpp"
#include "superlie/interchange.hpp"
#include "superlie/presentation.hpp"
#include "superlie/rational.hpp"
#include "superlie/sparse.hpp"
