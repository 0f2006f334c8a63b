#include "qshuffle/constructors_impl.hpp"

namespace qshuffle {

std::string to_string(KConstruction c) {
  switch (c) {
    case KConstruction::closed: return "closed";
    case KConstruction::alt: return "alt";
    case KConstruction::fused: return "fused";
  }
  return "closed";
}

KConstruction parse_k_construction(const std::string& s) {
  if (s == "closed") return KConstruction::closed;
  if (s == "alt") return KConstruction::alt;
  if (s == "fused") return KConstruction::fused;
  throw UsageError("unknown K construction '" + s + "' (expected closed, alt or fused)");
}

int rho_twice(int a, int b, int J) {
  const int four_rho =
      2 * a * a + 2 * b * b + 3 * J * J + 8 * a * b - 6 * a * J - 6 * b * J - 12 * a - 12 * b + 13 * J + 12;
  if (four_rho % 2 != 0) throw std::logic_error("rho(a,b,j) is not a half-integer");
  return four_rho / 2;
}

template class Builder<ExactField>;
template class Builder<NumericField>;

}  // namespace qshuffle
