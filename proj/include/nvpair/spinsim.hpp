#pragma once

#include "nvpair/spinsim/engine.hpp"
#include "nvpair/spinsim/register.hpp"
#include "nvpair/spinsim/sequence.hpp"
#include "nvpair/spinsim/traces.hpp"
