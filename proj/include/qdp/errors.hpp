#ifndef QDP_ERRORS_HPP
#define QDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdp {

// Requested enumeration or linear-algebra work exceeds a configured budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A matrix that was required to have full rank does not.
struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

// A dual code needed for sampling turned out to be trivial.
struct DegenerateDual : std::runtime_error {
  explicit DegenerateDual(const std::string& what) : std::runtime_error(what) {}
};

// A coordinate-selection step kept fewer coordinates than the target length.
struct TooFewKept : std::runtime_error {
  explicit TooFewKept(const std::string& what) : std::runtime_error(what) {}
};

// An emitted result failed its structural check (membership, weight, ...).
struct VerificationFailure : std::runtime_error {
  explicit VerificationFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qdp

#endif  // QDP_ERRORS_HPP
