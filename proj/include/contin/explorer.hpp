#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "contin/bignat.hpp"
#include "contin/census.hpp"
#include "contin/errors.hpp"
#include "contin/word.hpp"

namespace contin {

/// A class member together with how many reversal classes share its value.
struct WitnessRecord {
    Alphabet alphabet;
    ParikhVector parikh;
    CanonicalWord word;
    BigNat value;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

/// Smallest value with multiplicity >= target_mu, represented by its
/// lexicographically smallest word; nullopt when no value qualifies.
std::optional<WitnessRecord> find_witness(const Alphabet& alphabet, const ParikhVector& parikh,
                                          std::uint64_t target_mu, const CensusOptions& options = {});

struct ScanEntry {
    std::uint64_t m = 0;
    std::uint64_t max_multiplicity = 0;
    WitnessRecord witness;  // smallest value of maximal multiplicity

    friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

/// Raised by growing_multiplicity_scan; carries everything computed before
/// the first class that exceeded the enumeration limit.
class ScanLimitExceeded : public LimitExceeded {
public:
    ScanLimitExceeded(const LimitExceeded& cause, std::uint64_t m, std::vector<ScanEntry> partial);

    std::uint64_t first_infeasible_m() const noexcept { return m_; }
    const std::vector<ScanEntry>& partial() const noexcept { return partial_; }

private:
    std::uint64_t m_;
    std::vector<ScanEntry> partial_;
};

/// Census of every equipartitioned class (m, ..., m) for m in [m_start, m_end].
std::vector<ScanEntry> growing_multiplicity_scan(const Alphabet& alphabet, std::uint64_t m_start,
                                                 std::uint64_t m_end, const CensusOptions& options = {});

struct SearchResult {
    std::vector<WitnessRecord> records;
    std::uint64_t classes_scanned = 0;       // reversal classes enumerated in total
    std::uint64_t parikh_vectors_scanned = 0;
    bool budget_exhausted = false;           // stopped because the next class did not fit
};

/// Visits Parikh vectors (all entries >= 1) by increasing length, then
/// lexicographically, and collects every word whose multiplicity is exactly
/// target_mu. Stops before the first class that would push the number of
/// enumerated classes past `budget`.
SearchResult exact_multiplicity_search(const Alphabet& alphabet, std::uint64_t target_mu, std::uint64_t budget,
                                       const CensusOptions& options = {});

}  // namespace contin
