#pragma once

#include <string>

namespace simplexball {

/// Locale-independent, 17 significant digits ("%.17g" style, shortest exponent form).
std::string format_double(double value);

/// FNV-1a 64-bit hash as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace simplexball
