#pragma once

#include <stdexcept>

namespace gqpe {

// Thrown when an estimator has no defined result for the given data,
// e.g. an all-zero homodyne batch or a cancelling measurement sum.
class degenerate_data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by config and measurement-file parsing; the message names the
// offending key or line.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gqpe
