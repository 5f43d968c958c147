#pragma once

#include <stdexcept>

namespace relicut {

/// Malformed input or a violated precondition (bad graph, bad argument).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input lies outside the regime in which an algorithm's accuracy
/// guarantee holds. The message names the violated inequality.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace relicut
