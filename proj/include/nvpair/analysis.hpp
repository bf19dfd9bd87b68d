#pragma once

#include "nvpair/analysis/fit.hpp"
#include "nvpair/analysis/modulation.hpp"
#include "nvpair/analysis/peaks.hpp"
#include "nvpair/analysis/spectrum.hpp"
