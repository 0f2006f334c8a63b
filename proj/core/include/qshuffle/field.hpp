#pragma once

#include "qshuffle/scalar.hpp"
#include "qshuffle/word.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qshuffle {

// Word-level q-shuffle table. u * w maps to a sorted list of (word, weight)
// where the weight is a polynomial in v (only even exponents occur).
// Memoized per instance; not safe for concurrent use.
class WordShuffler {
 public:
  using Row = std::vector<std::pair<Word, LaurentPoly>>;
  const Row& row(Word u, Word w);
  std::size_t cached() const { return memo_.size(); }

 private:
  std::unordered_map<std::pair<Word, Word>, Row, WordPairHash> memo_;
};

// Exact coefficients in Scalar. Sums of products are accumulated without
// normalization and reduced once in finish().
class ExactField {
 public:
  using value_type = Scalar;
  using weight_type = LaurentPoly;

  struct RawTerm {
    std::uint64_t sig;
    LaurentPoly num;
    LaurentPoly den;
  };
  using Prepared = std::vector<RawTerm>;

  class Accumulator {
   public:
    void add(const Prepared& p);
    void add(const Prepared& p, const LaurentPoly& weight);
    bool empty() const { return slots_.empty(); }
    Scalar finish() const;

   private:
    struct Slot {
      std::uint64_t sig;
      LaurentPoly den;
      LaurentPoly num;
    };
    Slot& slot(std::uint64_t sig, const LaurentPoly& den);
    std::vector<Slot> slots_;
  };

  Prepared prepare(const Scalar& a) const;
  Prepared prepare(const Scalar& a, const Scalar& b) const;
  const std::vector<std::pair<Word, LaurentPoly>>& shuffle_row(Word u, Word w) const {
    return shuffler_.row(u, w);
  }

  Scalar zero() const { return {}; }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long long n) const { return Scalar(n); }
  Scalar vpow(int k) const { return Scalar::vpow(k); }
  Scalar qint(int n) const { return qshuffle::qint(n); }
  Scalar c_qpow(int k) const { return c_of_qpow(k); }
  Scalar from_laurent(const LaurentPoly& p) const { return Scalar(RatFun(p)); }
  Scalar sqrt_bracket_ratio(std::span<const int> numer, std::span<const int> denom) const {
    return qshuffle::sqrt_bracket_ratio(numer, denom);
  }
  Scalar inverse(const Scalar& x) const { return x.inverse(); }
  static constexpr bool exact = true;

 private:
  mutable WordShuffler shuffler_;
};

// Double-precision evaluation at a fixed q > 1, used as an independent
// cross-check of the exact kernel.
class NumericField {
 public:
  using value_type = double;
  using weight_type = double;
  using Prepared = double;

  class Accumulator {
   public:
    void add(double p) {
      sum_ += p;
      used_ = true;
    }
    void add(double p, double weight) {
      sum_ += p * weight;
      used_ = true;
    }
    bool empty() const { return !used_; }
    double finish() const { return sum_; }

   private:
    double sum_ = 0.0;
    bool used_ = false;
  };

  explicit NumericField(double q);
  double q() const { return q_; }

  double prepare(double a) const { return a; }
  double prepare(double a, double b) const { return a * b; }
  const std::vector<std::pair<Word, double>>& shuffle_row(Word u, Word w) const;

  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double from_int(long long n) const { return static_cast<double>(n); }
  double vpow(int k) const { return std::pow(v_, k); }
  double qint(int n) const;
  double c_qpow(int k) const { return std::pow(q_, k) - std::pow(q_, -k); }
  double from_laurent(const LaurentPoly& p) const { return p.evaluate(v_); }
  double sqrt_bracket_ratio(std::span<const int> numer, std::span<const int> denom) const;
  double inverse(double x) const { return 1.0 / x; }
  static constexpr bool exact = false;

 private:
  double q_;
  double v_;
  mutable WordShuffler shuffler_;
  mutable std::unordered_map<std::pair<Word, Word>, std::vector<std::pair<Word, double>>, WordPairHash> rows_;
};

}  // namespace qshuffle
