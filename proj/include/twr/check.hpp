#pragma once

#include <stdexcept>
#include <string>

// Internal invariant check that stays on in release builds. A failure is a bug
// in this library, never a user error.
#define TWR_ASSERT(cond)                                                                     \
  do {                                                                                       \
    if (!(cond))                                                                             \
      throw std::logic_error(std::string("invariant violated: " #cond " at ") + __FILE__ + \
                             ":" + std::to_string(__LINE__));                                \
  } while (false)
