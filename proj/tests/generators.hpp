#pragma once

#include "superq/random.hpp"

namespace superq::testing {

using superq::Rng;
using superq::random_polynomial;
using superq::random_scalar;

}  // namespace superq::testing
