#pragma once

#include <string>

namespace fde {

// Locale-independent decimal rendering with 17 significant digits; enough
// to round-trip any double exactly.
std::string format_double(double v);

}  // namespace fde
