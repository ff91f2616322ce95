#pragma once

#include <string>

namespace casimir {

/// Shortest-free, locale-independent rendering with 17 significant digits,
/// enough to round-trip any IEEE-754 double.
std::string format_double(double value);

}  // namespace casimir
