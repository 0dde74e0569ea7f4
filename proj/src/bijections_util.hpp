#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gg/marking.hpp"
#include "gg/partition.hpp"

namespace gg::detail {

// Multiset edit. Throws ContractError when a value to remove is absent.
Partition edit(const Partition& p, std::initializer_list<int> remove, std::initializer_list<int> add);
void require(bool ok, const std::string& what);
std::vector<int> row_sizes(const GGMarking& m);
// lambda^{(1)}_s with +inf for s <= 0 and -inf past the end.
int row1_or(const GGMarking& m, int s);

}  // namespace gg::detail
