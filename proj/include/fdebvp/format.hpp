#pragma once

#include <cstdarg>
#include <cstdio>
#include <string>

namespace fdebvp {

/** snprintf into a std::string. Locale-independent for the numeric
    conversions we use (%e, %g with the C locale's decimal point). */
inline std::string strf(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list args2;
  va_copy(args2, args);
  int n = std::vsnprintf(nullptr, 0, fmt, args);
  va_end(args);
  std::string out(n > 0 ? static_cast<std::size_t>(n) : 0, '\0');
  if (n > 0) std::vsnprintf(out.data(), out.size() + 1, fmt, args2);
  va_end(args2);
  return out;
}

}  // namespace fdebvp
