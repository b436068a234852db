#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "contin/bignat.hpp"
#include "contin/word.hpp"

namespace contin {

struct CensusOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned workers = 1;
    /// Largest class (counted up to reversal) that may be enumerated.
    std::uint64_t enumeration_limit = 100'000'000;
    /// Largest number of distinct values a value table may hold.
    std::uint64_t value_budget = std::uint64_t{1} << 25;
    /// Witnesses are kept for this many of the largest multiplicities...
    std::size_t witness_top_k = 3;
    /// ...and for at most this many values (and words per value) at each.
    std::size_t witnesses_per_multiplicity = 10;
};

/// n! / (p_1! ... p_s!)
BigNat multinomial(const ParikhVector& parikh);

/// Number of arrangements equal to their own reversal.
BigNat palindrome_count(const ParikhVector& parikh);

/// N(A, p): the number of arrangements counted up to reversal,
/// (multinomial + palindromes) / 2.
BigNat exact_class_count(const ParikhVector& parikh);

/// Throws LimitExceeded when the class has more than `limit` members.
void require_enumerable(const ParikhVector& parikh, std::uint64_t limit);

/// Calls `visit` once per reversal class, in lexicographic order of the
/// canonical representative. Single-threaded.
void for_each_class(const Alphabet& alphabet, const ParikhVector& parikh, std::uint64_t limit,
                    const std::function<void(const CanonicalWord&)>& visit);

std::vector<CanonicalWord> enumerate_classes(const Alphabet& alphabet, const ParikhVector& parikh,
                                             std::uint64_t limit = CensusOptions{}.enumeration_limit);

/// Exact value -> number of reversal classes attaining it, sorted by value.
struct ValueCounts {
    std::vector<std::pair<BigNat, std::uint64_t>> entries;
    std::uint64_t classes = 0;

    /// Occurrences of `value`; 0 when absent.
    std::uint64_t count_of(const BigNat& value) const;
};

/// First census pass: every class member is evaluated and tallied by exact value.
ValueCounts count_values(const Alphabet& alphabet, const ParikhVector& parikh, const CensusOptions& options = {});

/// Second census pass: the lexicographically smallest `per_value_cap` words for
/// each target value.
std::map<BigNat, std::vector<CanonicalWord>> collect_words(const Alphabet& alphabet, const ParikhVector& parikh,
                                                           const std::vector<BigNat>& targets,
                                                           std::size_t per_value_cap,
                                                           const CensusOptions& options = {});

struct ValueWitness {
    BigNat value;
    std::vector<CanonicalWord> words;

    friend bool operator==(const ValueWitness&, const ValueWitness&) = default;
};

struct WitnessGroup {
    std::uint64_t multiplicity = 0;
    std::vector<ValueWitness> values;  // ascending by value

    friend bool operator==(const WitnessGroup&, const WitnessGroup&) = default;
};

struct CensusReport {
    Alphabet alphabet;
    ParikhVector parikh;
    BigNat class_size;       // N
    BigNat distinct_values;  // P
    /// multiplicity -> number of distinct values attained exactly that often
    std::map<std::uint64_t, std::uint64_t> spectrum;
    std::uint64_t max_multiplicity = 0;
    std::vector<WitnessGroup> witnesses;  // descending multiplicity
    BigNat max_value;
    BigNat min_value;

    std::uint64_t length() const { return parikh.length(); }

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

CensusReport run_census(const Alphabet& alphabet, const ParikhVector& parikh, const CensusOptions& options = {});

/// Number of reversal classes x in the Abelian class of `w` with K(x) = K(w).
std::uint64_t multiplicity_of(const Word& w, const CensusOptions& options = {});

}  // namespace contin
