#include "scoring/score.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace scoring {
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw std::overflow_error("rational component out of range in '" + std::string(whole) + "'");
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Score::Score(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

Score Score::from_wide(Wide numerator, Wide denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Wide g = wide_gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!fits(numerator) || !fits(denominator)) {
    throw std::overflow_error("rational score overflow");
  }
  Score s;
  s.num_ = static_cast<std::int64_t>(numerator);
  s.den_ = static_cast<std::int64_t>(denominator);
  return s;
}

Score Score::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::int64_t den = 1;
  auto slash = body.find('/');
  std::int64_t num = parse_digits(body.substr(0, slash), text);
  if (slash != std::string_view::npos) {
    den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return from_wide(negative ? -Wide{num} : Wide{num}, den);
}

Score Score::operator-() const { return from_wide(-Wide{num_}, den_); }

Score& Score::operator+=(const Score& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(Wide{num_} + rhs.num_, den_);
  } else {
    *this = from_wide(Wide{num_} * rhs.den_ + Wide{rhs.num_} * den_, Wide{den_} * rhs.den_);
  }
  return *this;
}

Score& Score::operator-=(const Score& rhs) { return *this += -rhs; }

Score& Score::operator*=(const Score& rhs) {
  *this = from_wide(Wide{num_} * rhs.num_, Wide{den_} * rhs.den_);
  return *this;
}

Score& Score::operator/=(const Score& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero score");
  *this = from_wide(Wide{num_} * rhs.den_, Wide{den_} * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Score& lhs, const Score& rhs) {
  Wide l = Wide{lhs.num_} * rhs.den_;
  Wide r = Wide{rhs.num_} * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Score::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Score abs(const Score& s) { return s.sign() < 0 ? -s : s; }

std::ostream& operator<<(std::ostream& os, const Score& s) { return os << s.to_string(); }

std::size_t ScoreHash::operator()(const Score& s) const noexcept {
  auto h = static_cast<std::uint64_t>(s.numerator()) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(s.denominator()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

}  // namespace scoring
