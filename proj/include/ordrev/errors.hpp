#ifndef ORDREV_ERRORS_HPP
#define ORDREV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordrev {

// Byte range [begin, end) into the source text of a DSL file.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A term list that is not a valid Cantor normal form.
struct MalformedCnf : Error {
  using Error::Error;
};

// A chain of order type 0 (families consist of nonzero ordinals).
struct ZeroOrdinal : Error {
  using Error::Error;
};

struct EmptyFamily : Error {
  using Error::Error;
};

// Both infinite orientations present where a single one is required.
struct OrientationMixed : Error {
  using Error::Error;
};

// Partition of an ordinal that is not a limit ordinal.
struct NotLimit : Error {
  using Error::Error;
};

struct AlphaTooBig : Error {
  using Error::Error;
};

// Witness construction requested for a reversible verdict.
struct NotNonReversible : Error {
  using Error::Error;
};

// A condition the engine guarantees by construction failed anyway.
struct InternalInvariantError : Error {
  using Error::Error;
};

struct ParseError : Error {
  SourceSpan span;
  std::vector<std::string> expected;

  ParseError(const std::string& what, SourceSpan where,
             std::vector<std::string> expectedTokens = {})
      : Error(what), span(where), expected(std::move(expectedTokens)) {}
};

}  // namespace ordrev

#endif
