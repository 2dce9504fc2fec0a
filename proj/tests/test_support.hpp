#pragma once

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "hyperconnect/io.hpp"

namespace hc = hyperconnect;
using Q = hc::Rational;
using C = hc::Complex;

inline Q r(const char* s) { return Q::parse(s); }

// Small random rationals with a fixed seed so failures reproduce.
struct RationalSource {
  std::mt19937 gen{20240611u};
  Q next(int span = 9, int den = 7) {
    std::uniform_int_distribution<int> num(-span, span), d(1, den);
    return Q(num(gen), d(gen));
  }
  Q nonzero() {
    for (;;) {
      Q v = next();
      if (!v.is_zero()) return v;
    }
  }
};

