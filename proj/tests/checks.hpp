#pragma once

#include <functional>

#include "doctest.h"
#include "paulikit/error.hpp"

namespace checks {

// Runs f, which must throw paulikit::Error, and returns its code.
inline paulikit::Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const paulikit::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return paulikit::Errc::EmptyString;
}

}  // namespace checks
