// Error taxonomy shared by the whole library.
//
// Convention: "undefined" (a partial function not being defined at a point) is
// reported through std::optional / absent map entries, never through
// exceptions.  Exceptions are reserved for conditions that carry extra
// information the caller may want (fuel exhaustion, regularity violations,
// malformed names, parse errors) or that indicate misuse (unknown registry
// symbols, non-numeral codes).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace moschext {

// A computation ran out of its step/node budget before deciding anything.
// `steps` is the number of budget units consumed when the limit was hit.
class FuelExhaustedError : public std::runtime_error {
 public:
  explicit FuelExhaustedError(std::string context, std::uint64_t steps = 0)
      : std::runtime_error("fuel exhausted: " + context + " (after " +
                           std::to_string(steps) + " steps)"),
        steps_(steps) {}
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_;
};

// A multi-valued iteration met a reachable point where the control or the
// step function is not defined as the path characterization requires.  The
// witnessing point is reported via its canonical printed form.
class RegularityViolationError : public std::runtime_error {
 public:
  explicit RegularityViolationError(std::string printed_point)
      : std::runtime_error("iteration regularity violated at " +
                           printed_point),
        point_(std::move(printed_point)) {}
  const std::string& point() const { return point_; }

 private:
  std::string point_;
};

// code_to_nat was handed an element that is not a right-nested numeral chain.
class NotANatCodeError : public std::runtime_error {
 public:
  explicit NotANatCodeError(std::string printed)
      : std::runtime_error("not a numeral code: " + std::move(printed)) {}
};

// A name's leading values do not belong to a single tag class, or otherwise
// cannot be read as the encoding of an element shape.
class MalformedNameError : public std::runtime_error {
 public:
  explicit MalformedNameError(std::string detail)
      : std::runtime_error("malformed name: " + std::move(detail)) {}
};

// A term references a symbol the registry does not provide (in the requested
// space).
class UnknownSymbolError : public std::runtime_error {
 public:
  explicit UnknownSymbolError(std::string symbol, std::string detail)
      : std::runtime_error("unknown symbol '" + symbol + "'" +
                           (detail.empty() ? "" : " (" + detail + ")")),
        symbol_(std::move(symbol)) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// Parse failure for terms or element literals; positions are 1-based.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int col, std::string expected, std::string found)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": expected " + expected + ", found " + found),
        line_(line),
        col_(col),
        expected_(std::move(expected)),
        found_(std::move(found)) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int col_;
  std::string expected_;
  std::string found_;
};

// An interval-function driver established that its argument lies outside the
// function's domain.
class DomainViolationError : public std::runtime_error {
 public:
  explicit DomainViolationError(std::string detail)
      : std::runtime_error("domain violation: " + std::move(detail)) {}
};

// The two halves of a piecewise join disagree at the seam beyond tolerance.
class JoinMismatchError : public std::runtime_error {
 public:
  explicit JoinMismatchError(std::string detail)
      : std::runtime_error("join mismatch: " + std::move(detail)) {}
};

}  // namespace moschext
