#ifndef QF_DETAIL_PARSE_UTIL_HPP
#define QF_DETAIL_PARSE_UTIL_HPP

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qf/errors.hpp"

namespace qf {
namespace detail {

/// Whitespace-separated tokens; '#' starts a comment running to end of line.
class TokenReader {
 public:
  TokenReader(std::istream& in, std::string file) : in_(in), file_(std::move(file)) {}

  std::string next_token(const char* what) {
    for (;;) {
      if (pos_ >= current_.size() && !advance_line()) {
        throw ParseError(file_, line_, 1, std::string("unexpected end of file, expected ") + what);
      }
      while (pos_ < current_.size() && std::isspace(static_cast<unsigned char>(current_[pos_]))) ++pos_;
      if (pos_ >= current_.size()) continue;
      if (current_[pos_] == '#') {
        pos_ = current_.size();
        continue;
      }
      std::size_t start = pos_;
      while (pos_ < current_.size() && !std::isspace(static_cast<unsigned char>(current_[pos_])) &&
             current_[pos_] != '#') {
        ++pos_;
      }
      last_token_column_ = token_index_on_line_ + 1;
      ++token_index_on_line_;
      return current_.substr(start, pos_ - start);
    }
  }

  int next_int(const char* what) {
    std::string tok = next_token(what);
    try {
      std::size_t used = 0;
      int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return value;
    } catch (const std::exception&) {
      throw ParseError(file_, line_, last_token_column_,
                       std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
  }

  bool at_end() {
    for (;;) {
      while (pos_ < current_.size() && std::isspace(static_cast<unsigned char>(current_[pos_]))) ++pos_;
      if (pos_ < current_.size() && current_[pos_] == '#') pos_ = current_.size();
      if (pos_ < current_.size()) return false;
      if (!advance_line()) return true;
    }
  }

  int line() const { return line_; }
  int column() const { return last_token_column_; }

 private:
  bool advance_line() {
    if (!std::getline(in_, current_)) return false;
    ++line_;
    pos_ = 0;
    token_index_on_line_ = 0;
    return true;
  }

  std::istream& in_;
  std::string file_;
  std::string current_;
  std::size_t pos_ = 0;
  int line_ = 0;
  int token_index_on_line_ = 0;
  int last_token_column_ = 1;
};

inline std::optional<std::string_view> strip_prefix(std::string_view text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) == prefix) return text.substr(prefix.size());
  return std::nullopt;
}

inline int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  int value = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters in integer '" + s + "'");
  return value;
}

}  // namespace detail
}  // namespace qf

#endif
