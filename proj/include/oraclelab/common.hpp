#pragma once

#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace oraclelab {

/// Thrown when an operation would exceed the configured memory budget.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on contract violations (invalid diagrams, size mismatches, ...).
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Default tolerances: 1e-8 relative for equalities, 1e-9 absolute slack for
/// inequalities. Overridable per run.
struct Tolerances {
    double eq = 1e-8;
    double ineq = 1e-9;
};

/// Process-wide cap on single large dense allocations. Checks declare their
/// peak demand up front and refuse early instead of thrashing.
class MemoryBudget {
public:
    static void set_cap(std::size_t bytes) { cap_().store(bytes); }
    static std::size_t cap() { return cap_().load(); }

    static void require(std::size_t bytes, const std::string& what) {
        if (bytes > cap()) {
            throw CapacityError(what + " needs " + std::to_string(bytes >> 20) +
                                " MiB, cap is " + std::to_string(cap() >> 20) + " MiB");
        }
    }

private:
    static std::atomic<std::size_t>& cap_() {
        static std::atomic<std::size_t> cap{std::size_t{2} << 30};  // 2 GiB
        return cap;
    }
};

}  // namespace oraclelab
