#pragma once

#include <gmpxx.h>

#include <string>

namespace loday {

using Rational = mpq_class;

/// Reduced "p" or "p/q" form.
inline std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

}  // namespace loday
