#pragma once

#include <optional>
#include <string_view>

namespace aquanim {

enum class Easing { Linear, Smoothstep };

// Maps local track time t in [0,1] to interpolation progress u in [0,1].
// Smoothstep is the cubic 3t^2 - 2t^3: zero velocity at both ends.
// Throws DomainError when t is outside [0,1] or not finite.
double ease(Easing easing, double t);

std::string_view to_string(Easing easing);
std::optional<Easing> parse_easing(std::string_view name);

}  // namespace aquanim
