#include "aquanim/core/easing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aquanim/core/errors.hpp"

namespace aquanim {

double ease(Easing easing, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("easing parameter must lie in [0,1], got " +
                      std::to_string(t));
  }
  switch (easing) {
    case Easing::Linear:
      return t;
    case Easing::Smoothstep:
      return std::clamp(t * t * (3.0 - 2.0 * t), 0.0, 1.0);
  }
  return t;
}

std::string_view to_string(Easing easing) {
  switch (easing) {
    case Easing::Linear:
      return "linear";
    case Easing::Smoothstep:
      return "smoothstep";
  }
  return "smoothstep";
}

std::optional<Easing> parse_easing(std::string_view name) {
  if (name == "linear") return Easing::Linear;
  if (name == "smoothstep") return Easing::Smoothstep;
  return std::nullopt;
}

}  // namespace aquanim
