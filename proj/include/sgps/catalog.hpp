#pragma once

#include <string>
#include <vector>

namespace sgps {

/// Deterministic default catalog: zmod(2..max_order) followed by the named
/// extras (gf 4, Z2 x Z2, the two constant-diagonal triangular rings over
/// Z2, and the full 2x2 upper triangular ring over Z2).
std::vector<std::string> catalog_generate(int max_order);

}  // namespace sgps
