#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scoring/game.hpp"
#include "scoring/octal.hpp"

namespace scoring {

/// Syntax error in game or ruleset text; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Brace notation:
///   game     := rational | '{' options '|' rational '|' options '}'
///   options  := '.' | game (',' game)*
///   rational := ['+'|'-'] digits ['/' digits]
/// Whitespace is ignored. A bare rational is the number game.
GameId parse_game(std::string_view text);

/// Canonical text: options in structural order, leaves as bare rationals.
std::string format_game(GameId g);

/// Game file: one game per line, '#' starts a comment, blank lines skipped.
/// Errors carry the 1-based line number in the message.
std::vector<GameId> parse_game_lines(std::string_view contents);

/// "0.d1d2...dk[:p1,...,pk]", the "0." prefix optional. Without points the
/// default scheme applies (p_i = i when digit i is 1, 2 or 3, else 0).
OctalRuleset parse_octal(std::string_view text);

/// "0.d1...dk:p1,...,pk" with every point written out.
std::string format_octal(const OctalRuleset& rules);

}  // namespace scoring
