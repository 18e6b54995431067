#pragma once

#include <stdexcept>

namespace ramcorr {

/// Wintner's period of the zero function, or periodicity claims about it.
class UndefinedPeriodError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation's stated precondition (e.g. the Two-Seasons axioms) fails.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A parity-specific evaluator received a shift of the other parity.
class WrongBranchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramcorr
