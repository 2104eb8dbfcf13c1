#include "sgps/catalog.hpp"

#include "sgps/errors.hpp"

namespace sgps {

std::vector<std::string> catalog_generate(int max_order) {
    if (max_order < 2) throw SpecError("catalog max order must be >= 2");
    std::vector<std::string> specs;
    for (int n = 2; n <= max_order; ++n) specs.push_back("zmod " + std::to_string(n));
    specs.push_back("gf 4");
    specs.push_back("product zmod2 zmod2");
    specs.push_back("smatrix 2 zmod2");
    specs.push_back("smatrix 3 zmod2");
    specs.push_back("uppertri 2 zmod2");
    return specs;
}

}  // namespace sgps
