#ifndef COSPAN_ERRORS_HPP
#define COSPAN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace cospan {

// Domain-level failure: bad generator, mismatched boundaries, non-surjective
// lumping map, and so on. `code` is a stable machine-readable tag such as
// "ColumnSumNonzero"; the CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

// Malformed input (JSON, rational literals, CLI flag values). The CLI maps
// these to exit status 2.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string where, const std::string& detail)
      : std::runtime_error(where + ": " + detail), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

}  // namespace cospan

#endif
