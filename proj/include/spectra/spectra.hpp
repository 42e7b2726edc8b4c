#pragma once

#include "spectra/batch.hpp"
#include "spectra/eigensolve.hpp"
#include "spectra/generators.hpp"
#include "spectra/graph.hpp"
#include "spectra/json_io.hpp"
#include "spectra/matrix.hpp"
#include "spectra/operators.hpp"
#include "spectra/rng.hpp"
#include "spectra/theorems.hpp"
