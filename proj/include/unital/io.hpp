#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "unital/incidence.hpp"

namespace unital {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct UnitalFile {
  Incidence incidence;
  /// Block size declared in the header.
  std::size_t k = 0;
};

/// Reads the text format
///
///   unital v=<int> k=<int>
///   <ascending point indices of one block>
///   ...
///
/// `#` starts a comment, blank lines are skipped. Throws ParseError for a
/// malformed header or block line, an out of range or non-ascending entry,
/// or a repeated block. Design axioms are not checked here.
UnitalFile parse_unital(std::istream& in);
UnitalFile parse_unital_file(const std::string& path);

/// parse_unital followed by validation as a unital of order k-1. Throws
/// std::invalid_argument with the validation message if that fails.
Unital read_unital(std::istream& in);
Unital read_unital_file(const std::string& path);

/// Canonical form: header, then blocks in lexicographic order.
void write_unital(const Incidence& inc, std::ostream& out);
void write_unital_file(const Incidence& inc, const std::string& path);

}  // namespace unital
