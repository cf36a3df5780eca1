#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace scoring {

/// Exact rational score, always stored in lowest terms with a positive
/// denominator. Arithmetic is checked: a result that does not fit in 64-bit
/// numerator/denominator throws std::overflow_error instead of wrapping.
class Score {
 public:
  constexpr Score() = default;
  constexpr Score(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of literals
  Score(std::int64_t numerator, std::int64_t denominator);

  /// Parses "[+|-]digits[/digits]". Throws std::invalid_argument on bad text
  /// or a zero denominator.
  static Score parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Score operator-() const;
  Score& operator+=(const Score& rhs);
  Score& operator-=(const Score& rhs);
  Score& operator*=(const Score& rhs);
  Score& operator/=(const Score& rhs);

  friend Score operator+(Score lhs, const Score& rhs) { return lhs += rhs; }
  friend Score operator-(Score lhs, const Score& rhs) { return lhs -= rhs; }
  friend Score operator*(Score lhs, const Score& rhs) { return lhs *= rhs; }
  friend Score operator/(Score lhs, const Score& rhs) { return lhs /= rhs; }

  friend bool operator==(const Score&, const Score&) = default;
  friend std::strong_ordering operator<=>(const Score& lhs, const Score& rhs);

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  static Score from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Score abs(const Score& s);

std::ostream& operator<<(std::ostream& os, const Score& s);

struct ScoreHash {
  std::size_t operator()(const Score& s) const noexcept;
};

}  // namespace scoring
