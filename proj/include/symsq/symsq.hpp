// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "symsq/collective.hpp"
#include "symsq/covariance.hpp"
#include "symsq/errors.hpp"
#include "symsq/invariants.hpp"
#include "symsq/models.hpp"
#include "symsq/numerics.hpp"
#include "symsq/oracle.hpp"
#include "symsq/states.hpp"
