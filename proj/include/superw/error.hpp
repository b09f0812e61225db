#pragma once

#include <stdexcept>

namespace superw {

/// Invalid input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace superw
