#pragma once

#include <gmpxx.h>

#include <string>

namespace liecurrent {

/// Exact rational scalar. All arithmetic in this project happens over Q;
/// mpq_class keeps values in canonical reduced form (coprime, positive
/// denominator) and never rounds.
using Rat = mpq_class;

inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
Rat rat_parse(const std::string& s);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

}  // namespace liecurrent
