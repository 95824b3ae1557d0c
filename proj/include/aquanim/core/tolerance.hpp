#pragma once

namespace aquanim {

// Relative tolerance for plan-level conservation of liquid area.
inline constexpr double kPlanTolerance = 1e-9;
// Relative tolerance for closed-form identities (reshape area, endpoints).
inline constexpr double kIdentityTolerance = 1e-12;

}  // namespace aquanim
