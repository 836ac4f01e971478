#ifndef HYPERBOUND_UTIL_HPP
#define HYPERBOUND_UTIL_HPP

#include <stdexcept>
#include <string>

namespace hyperbound {

/// Thrown when an enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// b^e as an exact integer; throws std::overflow_error if it leaves int64 range.
long long ipow(long long b, int e);

/// Worker cap for internal sweeps: min(hardware, HYPERBOUND_THREADS), at least 1.
int thread_budget();

}  // namespace hyperbound

#endif
