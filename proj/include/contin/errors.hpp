#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "contin/bignat.hpp"

namespace contin {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input, out-of-range index, violated precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An Abelian class is larger than the configured enumeration limit.
class LimitExceeded : public Error {
public:
    LimitExceeded(BigNat class_size, std::uint64_t limit);
    LimitExceeded(const std::string& what, BigNat class_size, std::uint64_t limit);

    const BigNat& class_size() const noexcept { return class_size_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    BigNat class_size_;
    std::uint64_t limit_;
};

// Statistics gathered before a census had to stop. Never a valid report.
struct PartialCensus {
    std::uint64_t classes_visited = 0;
    std::uint64_t distinct_values_seen = 0;
    bool valid = false;
};

class MemoryBudgetExceeded : public Error {
public:
    MemoryBudgetExceeded(PartialCensus partial, std::uint64_t budget);

    const PartialCensus& partial() const noexcept { return partial_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    PartialCensus partial_;
    std::uint64_t budget_;
};

// A certified comparison could not be decided within the maximum precision.
class PrecisionExhausted : public Error {
public:
    PrecisionExhausted(const std::string& what, unsigned max_bits)
        : Error(what + " (undecided at the maximum precision of " + std::to_string(max_bits) + " bits)"), max_bits_(max_bits) {}

    unsigned max_bits() const noexcept { return max_bits_; }

private:
    unsigned max_bits_;
};

}  // namespace contin
