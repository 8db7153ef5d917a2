#include "fde/csv.hpp"

#include <charconv>
#include <system_error>

namespace fde {

std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace fde
