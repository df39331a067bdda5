#pragma once

#include "qtl/khcomplex.hpp"

namespace qtl {

/// Khovanov homology of a closed diagram from the full cube of resolutions,
/// with the same gradings as scan_link. Throws TooLarge past kCubeCeiling
/// crossings.
inline constexpr int kCubeCeiling = 14;
BettiTable cube_oracle(const TangleDiagram& d);

}  // namespace qtl
