#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace wtenum {

// C ⊂ D ⊂ E: D has parity-check polynomial h = prod_{u in Gamma} h_u,
// C drops h_1, E multiplies by (X - 1).
enum class Family { kC, kD, kE };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// m^2, m^2 + 2m, m^2 + 2m + 1.
int family_dimension(Family f, int m);

}  // namespace wtenum
