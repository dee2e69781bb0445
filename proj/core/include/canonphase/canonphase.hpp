#pragma once

#include "canonphase/canonical_povm.hpp"
#include "canonphase/loss_channel.hpp"
#include "canonphase/optimal_state.hpp"
#include "canonphase/spin.hpp"
#include "canonphase/sweep.hpp"
#include "canonphase/wigner.hpp"
