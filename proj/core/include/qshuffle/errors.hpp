#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

// Invalid parameters supplied by a caller (bad spin, degree, flag, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qshuffle
