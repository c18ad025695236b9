#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "error.hpp"

namespace cyclepack {

// Exact arbitrary-precision rational. All LP state and all oracle weights use
// this type; doubles appear only in drawing code.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  require(den != 0, ErrorKind::BadParams, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
inline Rat parse_rat(const std::string& s) {
  try {
    auto pos = s.find('/');
    if (pos == std::string::npos) {
      return Rat(mpz_class(s));
    }
    mpz_class p(s.substr(0, pos));
    mpz_class q(s.substr(pos + 1));
    require(q != 0, ErrorKind::BadInstance, "rational with zero denominator: " + s);
    Rat r(p, q);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::BadInstance, "bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_sum(const std::vector<Rat>& v) {
  Rat s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace cyclepack
