#pragma once

#include <string>

#include "tatekit/lie.hpp"
#include "tatekit/resolution.hpp"

namespace kt {

// Key-value text description of a quotient ring, one entry per line:
//
//   field = QQ            (or: field = Fp 5)
//   vars = x, y, z
//   rel = x^2 + y*z       (repeatable)
//   max_degree = 6        (optional)
//   internal_cap = 40     (optional)
//
// Blank lines and '#' comments are ignored. Parse errors carry the
// line and column of the offending token.
struct SpecFile {
  RingSpec spec;
  int max_degree = -1;    // -1 when the file does not set one
  long internal_cap = 0;  // 0 when the file does not set one
};

SpecFile parse_spec_file(const std::string& text);

// Canonical rendering; parse_spec_file(print_spec_file(s)) reproduces s,
// and print∘parse is the identity on canonical files.
std::string print_spec_file(const SpecFile& s);

// Restricted Lie data in degrees one and two, one structure constant per
// line, indices 1-based and upper-triangular:
//
//   field = QQ
//   n = 3
//   k = 1
//   bracket 1 1 1 = 2     (beta_p coordinate of [alpha_i, alpha_j], p i j)
//   q 1 1 = 1             (beta_p coordinate of q(alpha_i), p i)
//
// Entries not listed are zero.
struct LieFile {
  RestrictedLie lie;
};

LieFile parse_lie_file(const std::string& text);
std::string print_lie_file(const LieFile& l);

}  // namespace kt
