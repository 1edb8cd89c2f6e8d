#pragma once

namespace ck::bounds {

// Upper limit shared by the Leibniz determinant oracle and the map
// enumeration (both are factorial/exponential). Defaults to 8; the
// CONDENSATION_KIT_MAX_N environment variable raises or lowers it.
int max_n();

}  // namespace ck::bounds
