#pragma once

#include <string>
#include <vector>

#include "liftvf/poly.hpp"

namespace liftvf {

enum class Space { domain, codomain };

// Ordered component list of polynomials on one of the two spaces of a cross
// cap context, plus a display label such as "xi1_2" or "eta_e".
struct VectorField {
    Space space;
    std::vector<Poly> components;
    std::string label;
};

}  // namespace liftvf
