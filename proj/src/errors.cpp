#include "contin/errors.hpp"

namespace contin {

LimitExceeded::LimitExceeded(BigNat class_size, std::uint64_t limit)
    : LimitExceeded("class has " + to_decimal(class_size) +
                        " members up to reversal, exceeding the enumeration limit " + std::to_string(limit),
                    class_size, limit) {}

LimitExceeded::LimitExceeded(const std::string& what, BigNat class_size, std::uint64_t limit)
    : Error(what), class_size_(std::move(class_size)), limit_(limit) {}

MemoryBudgetExceeded::MemoryBudgetExceeded(PartialCensus partial, std::uint64_t budget)
    : Error("value table exceeded the budget of " + std::to_string(budget) + " distinct values after " +
            std::to_string(partial.classes_visited) + " classes; partial statistics are invalid"),
      partial_(partial),
      budget_(budget) {}

}  // namespace contin
