#pragma once

#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley::fixtures {

/// One representative of every isomorphism class of groups of order <= 16
/// (42 groups), in order of increasing order.
std::vector<GroupTable> small_groups();

/// small_groups() plus larger groups up to order 64 used for lattice checks.
std::vector<GroupTable> lattice_groups();

/// Looks a group up by label in lattice_groups(); throws std::invalid_argument.
GroupTable find(const std::string& label);

}  // namespace cayley::fixtures
