#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "nakayama/algebra.hpp"

namespace testing_util {

inline nakayama::errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const nakayama::error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return nakayama::errc::parse_error;
}

// The three worked algebras: A_3 / <1:3>, the 3-cycle / <1:3>, A_5 / <1:3, 2:3>.
inline nakayama::NakayamaAlgebra example_a3() { return nakayama::linear_algebra(3, {{1, 3}}); }
inline nakayama::NakayamaAlgebra example_cyclic3() { return nakayama::cyclic_algebra(3, {{1, 3}}); }
inline nakayama::NakayamaAlgebra example_a5() { return nakayama::linear_algebra(5, {{1, 3}, {2, 3}}); }

}  // namespace testing_util
