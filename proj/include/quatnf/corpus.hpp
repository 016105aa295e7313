#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatnf/polynomial.hpp"

namespace quatnf {

/// LHS - RHS of one instance of a known identity.
struct Identity {
  /// Shared by every instance of the same identity, e.g. `eq9-line1`.
  std::string family;
  /// Family plus instance indices, e.g. `eq9-line1(1,2,3)`.
  std::string name;
  RationalPolynomial element;
};

/// Every instance uses variable indices <= max_n. Indexed identities are
/// instantiated over all index tuples up to 4 variables; larger families are
/// sampled with `seed`.
std::vector<Identity> identity_corpus(int max_n = 6, std::uint64_t seed = 0);

}  // namespace quatnf
