#pragma once

#include "cayley/group.hpp"

namespace cayley {

// Builds a GroupTable from a table already known to satisfy the axioms.
GroupTable make_group(std::size_t n, std::vector<Element> mul, std::string label, Family family = Family::kOther,
                      std::size_t param = 0);

}  // namespace cayley
