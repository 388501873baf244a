#pragma once

#include <string>
#include <vector>

#include "comptype/complex.hpp"

namespace comptype {

// Named corpus pairs:
//   simplex n | sphere n | ball_pair n | path k | cycle k |
//   torus7 | rp2_6 | klein8 | dunce_hat | bing_house |
//   cone_of NAME PARAMS... | suspension_of NAME PARAMS...
// A is empty unless the name defines it (ball_pair, cone_of). Throws
// std::invalid_argument on an unknown name or bad parameters.
Pair generate(const std::string& name, const std::vector<std::string>& params);

std::vector<std::string> generator_names();

}  // namespace comptype
