#include "contin/explorer.hpp"

#include <algorithm>

namespace contin {

namespace {

WitnessRecord make_record(const Alphabet& alphabet, const ParikhVector& parikh, const BigNat& value,
                          std::uint64_t multiplicity, const CensusOptions& options) {
    auto words = collect_words(alphabet, parikh, {value}, 1, options);
    return WitnessRecord{alphabet, parikh, std::move(words.at(value).front()), value, multiplicity};
}

/// Advances `p` to the next composition of the same sum in lexicographic
/// order; false when `p` was the last one.
bool next_composition(std::vector<Count>& p) {
    const std::size_t s = p.size();
    if (s < 2) return false;
    Count tail = p[s - 1];
    for (std::size_t i = s - 1; i-- > 0;) {
        // Suffix after i holds `tail` units over s-1-i parts; it can give one up
        // if it stays at least one per part.
        if (tail > s - 1 - i) {
            ++p[i];
            const Count rest = tail - 1;
            for (std::size_t j = i + 1; j + 1 < s; ++j) p[j] = 1;
            p[s - 1] = rest - static_cast<Count>(s - 2 - i);
            return true;
        }
        tail += p[i];
    }
    return false;
}

}  // namespace

ScanLimitExceeded::ScanLimitExceeded(const LimitExceeded& cause, std::uint64_t m, std::vector<ScanEntry> partial)
    : LimitExceeded("scan stopped at m=" + std::to_string(m) + ": " + cause.what(), cause.class_size(),
                    cause.limit()),
      m_(m),
      partial_(std::move(partial)) {}

std::optional<WitnessRecord> find_witness(const Alphabet& alphabet, const ParikhVector& parikh,
                                          std::uint64_t target_mu, const CensusOptions& options) {
    if (target_mu < 1) throw ValidationError("find_witness: target multiplicity must be >= 1");
    const ValueCounts counts = count_values(alphabet, parikh, options);
    for (const auto& [value, mu] : counts.entries) {
        if (mu >= target_mu) return make_record(alphabet, parikh, value, mu, options);
    }
    return std::nullopt;
}

std::vector<ScanEntry> growing_multiplicity_scan(const Alphabet& alphabet, std::uint64_t m_start,
                                                 std::uint64_t m_end, const CensusOptions& options) {
    if (m_start < 1 || m_end < m_start) throw ValidationError("scan: requires 1 <= m_start <= m_end");
    std::vector<ScanEntry> out;
    for (std::uint64_t m = m_start; m <= m_end; ++m) {
        const ParikhVector parikh = ParikhVector::equipartitioned(alphabet.size(), static_cast<Count>(m));
        ValueCounts counts;
        try {
            counts = count_values(alphabet, parikh, options);
        } catch (const LimitExceeded& e) {
            throw ScanLimitExceeded(e, m, std::move(out));
        }
        std::uint64_t best = 0;
        const BigNat* best_value = nullptr;
        for (const auto& [value, mu] : counts.entries) {
            if (mu > best) {
                best = mu;
                best_value = &value;
            }
        }
        out.push_back({m, best, make_record(alphabet, parikh, *best_value, best, options)});
    }
    return out;
}

SearchResult exact_multiplicity_search(const Alphabet& alphabet, std::uint64_t target_mu, std::uint64_t budget,
                                       const CensusOptions& options) {
    if (target_mu < 1) throw ValidationError("search: target multiplicity must be >= 1");
    SearchResult result;
    const std::size_t s = alphabet.size();
    const BigNat budget_big(static_cast<unsigned long>(budget));
    const BigNat limit_big(static_cast<unsigned long>(options.enumeration_limit));
    for (std::uint64_t n = s;; ++n) {
        std::vector<Count> p(s, 1);
        p.back() = static_cast<Count>(n - (s - 1));
        do {
            const ParikhVector parikh(p);
            const BigNat size = exact_class_count(parikh);
            if (BigNat(static_cast<unsigned long>(result.classes_scanned)) + size > budget_big ||
                size > limit_big) {
                result.budget_exhausted = true;
                return result;
            }
            const ValueCounts counts = count_values(alphabet, parikh, options);
            result.classes_scanned += counts.classes;
            ++result.parikh_vectors_scanned;

            std::vector<BigNat> targets;
            for (const auto& [value, mu] : counts.entries) {
                if (mu == target_mu) targets.push_back(value);
            }
            if (targets.empty()) continue;
            auto words = collect_words(alphabet, parikh, targets, target_mu, options);
            for (const auto& value : targets) {
                for (auto& w : words.at(value)) {
                    result.records.push_back(WitnessRecord{alphabet, parikh, std::move(w), value, target_mu});
                }
            }
        } while (next_composition(p));
    }
}

}  // namespace contin
