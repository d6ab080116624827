#ifndef QF_ERRORS_HPP
#define QF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qf {

/// Error while reading a table file; carries the 1-based line and the
/// 1-based token column of the offending token.
struct ParseError : std::runtime_error {
  ParseError(std::string file_, int line_, int column_, const std::string& message)
      : std::runtime_error(file_ + ":" + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + message),
        file(std::move(file_)),
        line(line_),
        column(column_) {}
  std::string file;
  int line;
  int column;
};

}  // namespace qf

#endif
