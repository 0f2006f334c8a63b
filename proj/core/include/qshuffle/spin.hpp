#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace qshuffle {

// A positive half-integer j, stored as 2j.
class Spin {
 public:
  // Throws UsageError unless twice >= 1.
  static Spin from_twice(int twice);
  // Accepts "n/2" or an integer "n"; throws UsageError otherwise.
  static Spin parse(std::string_view text);

  int twice() const { return twice_; }
  int dim() const { return twice_ + 1; }
  std::string str() const;

  friend auto operator<=>(const Spin&, const Spin&) = default;

 private:
  explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 1;
};

inline Spin half() { return Spin::from_twice(1); }

}  // namespace qshuffle
