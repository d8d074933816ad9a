#ifndef WREATH_ERRORS_HPP
#define WREATH_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreath {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain: mismatched (n, r), an index
/// out of range, or a class that violates a short-cycle requirement.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An enumeration or expansion would exceed the configured work budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

enum class EnumerationStrategy {
  automatic,   // currently the constructive path
  filter,      // enumerate S_{n,r} and keep elements of the requested cycle type
  constructive // build class elements directly from the cycle-type parametrization
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

/// Work limits shared by every brute-force or expansion routine.
struct ComputeLimits {
  std::uint64_t budget = kDefaultBudget;   // element visits / matrix entries
  std::size_t max_terms = kDefaultMaxTerms; // terms kept by statistic products
  unsigned jobs = 1;
  EnumerationStrategy strategy = EnumerationStrategy::automatic;
};

} // namespace wreath

#endif // WREATH_ERRORS_HPP
