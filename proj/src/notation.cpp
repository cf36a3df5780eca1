#include "scoring/notation.hpp"

#include <cctype>
#include <string>
#include <unordered_map>

namespace scoring {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class GameParser {
 public:
  explicit GameParser(std::string_view text) : text_(text) {}

  GameId parse() {
    GameId g = game();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GameId game() {
    if (peek() != '{') return number(rational());
    ++pos_;
    std::vector<GameId> left = options('|');
    expect('|');
    if (peek() == '}') fail("missing score slot");
    Score score = rational();
    expect('|');
    std::vector<GameId> right = options('}');
    expect('}');
    return make_game(std::move(left), score, std::move(right));
  }

  std::vector<GameId> options(char terminator) {
    std::vector<GameId> out;
    char c = peek();
    if (c == '.') {
      ++pos_;
      return out;
    }
    if (c == terminator) fail("empty option set; write '.'");
    out.push_back(game());
    while (peek() == ',') {
      ++pos_;
      out.push_back(game());
    }
    return out;
  }

  Score rational() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    if (!digits()) {
      pos_ = start;
      fail("expected a rational");
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail("expected a denominator");
    }
    try {
      return Score::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GameId parse_game(std::string_view text) { return GameParser(text).parse(); }

std::string format_game(GameId g) {
  std::unordered_map<GameId, std::string, GameIdHash> memo;
  auto walk = [&](auto& self, GameId x) -> const std::string& {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const GameNode& n = node(x);
    std::string out;
    if (n.left.empty() && n.right.empty()) {
      out = n.score.to_string();
    } else {
      auto list = [&](const std::vector<GameId>& opts) {
        if (opts.empty()) {
          out += '.';
          return;
        }
        for (std::size_t i = 0; i < opts.size(); ++i) {
          if (i) out += ',';
          out += self(self, opts[i]);
        }
      };
      out += '{';
      list(n.left);
      out += '|';
      out += n.score.to_string();
      out += '|';
      list(n.right);
      out += '}';
    }
    return memo.emplace(x, std::move(out)).first->second;
  };
  return walk(walk, g);
}

std::vector<GameId> parse_game_lines(std::string_view contents) {
  std::vector<GameId> games;
  std::size_t line_no = 0;
  while (!contents.empty()) {
    ++line_no;
    auto eol = contents.find('\n');
    std::string_view line = contents.substr(0, eol);
    contents.remove_prefix(eol == std::string_view::npos ? contents.size() : eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      games.push_back(parse_game(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  return games;
}

OctalRuleset parse_octal(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos, 2) == "0.") pos += 2;
  OctalRuleset rules;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    const int d = text[pos] - '0';
    if (d > 7) throw ParseError("octal digit " + std::to_string(d) + " out of range 0..7", pos);
    rules.digits.push_back(static_cast<std::uint8_t>(d));
    ++pos;
  }
  if (rules.digits.empty()) throw ParseError("expected octal digits", pos);
  skip();
  if (pos == text.size()) {
    rules.points = OctalRuleset::default_points(rules.digits);
  } else {
    if (text[pos] != ':') throw ParseError("expected ':' before points", pos);
    ++pos;
    while (true) {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      try {
        rules.points.push_back(Score::parse(text.substr(start, pos - start)));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), start);
      }
      skip();
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ',' between points", pos);
      ++pos;
    }
  }
  if (rules.points.size() != rules.digits.size()) {
    throw ParseError("ruleset has " + std::to_string(rules.digits.size()) + " digits but " +
                         std::to_string(rules.points.size()) + " points",
                     pos);
  }
  try {
    rules.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  return rules;
}

std::string format_octal(const OctalRuleset& rules) {
  std::string out = "0.";
  for (std::uint8_t d : rules.digits) out += static_cast<char>('0' + d);
  out += ':';
  for (std::size_t i = 0; i < rules.points.size(); ++i) {
    if (i) out += ',';
    out += rules.points[i].to_string();
  }
  return out;
}

}  // namespace scoring
