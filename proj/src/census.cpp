#include "contin/census.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>
#include <unordered_set>

#include "class_space.hpp"
#include "contin/core.hpp"
#include "contin/errors.hpp"

namespace contin {

using detail::BigNatHash;
using detail::ClassSpace;
using detail::Rank;
using detail::U128Hash;
using detail::u128;

BigNat multinomial(const ParikhVector& parikh) {
    BigNat out = factorial(parikh.length());
    for (Count p : parikh.counts()) mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), factorial(p).get_mpz_t());
    return out;
}

BigNat palindrome_count(const ParikhVector& parikh) {
    // A palindrome is fixed by its first half; at most one letter may have an
    // odd count, and that letter sits in the middle.
    std::size_t odd = 0;
    std::vector<Count> halves;
    halves.reserve(parikh.size());
    for (Count p : parikh.counts()) {
        odd += p % 2;
        if (p / 2 > 0) halves.push_back(p / 2);
    }
    if (odd > 1) return 0;
    if (halves.empty()) return 1;
    return multinomial(ParikhVector(std::move(halves)));
}

BigNat exact_class_count(const ParikhVector& parikh) {
    BigNat total = multinomial(parikh) + palindrome_count(parikh);
    mpz_divexact_ui(total.get_mpz_t(), total.get_mpz_t(), 2);
    return total;
}

void require_enumerable(const ParikhVector& parikh, std::uint64_t limit) {
    BigNat size = exact_class_count(parikh);
    if (size > BigNat(static_cast<unsigned long>(limit))) throw LimitExceeded(std::move(size), limit);
}

void for_each_class(const Alphabet& alphabet, const ParikhVector& parikh, std::uint64_t limit,
                    const std::function<void(const CanonicalWord&)>& visit) {
    require_aligned(alphabet, parikh);
    require_enumerable(parikh, limit);
    const ClassSpace space(alphabet, parikh);
    for (const auto& prefix : detail::make_shards(space)) {
        detail::enumerate_shard(space, prefix, [&](std::span<const Rank> r, std::size_t) {
            visit(canonical_unchecked(detail::ranks_to_letters(space, r)));
        });
    }
}

std::vector<CanonicalWord> enumerate_classes(const Alphabet& alphabet, const ParikhVector& parikh,
                                             std::uint64_t limit) {
    std::vector<CanonicalWord> out;
    for_each_class(alphabet, parikh, limit, [&](const CanonicalWord& w) { out.push_back(w); });
    return out;
}

std::uint64_t ValueCounts::count_of(const BigNat& value) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), value,
                               [](const auto& e, const BigNat& v) { return e.first < v; });
    return it != entries.end() && it->first == value ? it->second : 0;
}

namespace {

struct BudgetHit {};

template <class V, class Hash>
ValueCounts count_values_as(const ClassSpace& space, const CensusOptions& options) {
    using Table = std::unordered_map<V, std::uint64_t, Hash>;
    const auto shards = detail::make_shards(space);
    std::vector<Table> tables(shards.size());
    std::vector<std::uint64_t> visited(shards.size(), 0);
    std::atomic<std::uint64_t> classes_seen{0};
    std::atomic<std::uint64_t> values_seen{0};

    try {
        detail::run_sharded(shards.size(), options.workers, [&](std::size_t i) {
            Table& table = tables[i];
            detail::PrefixContinuant<V> k(space.letters, space.n);
            std::uint64_t count = 0;
            detail::enumerate_shard(space, shards[i], [&](std::span<const Rank> r, std::size_t dirty) {
                ++table[k.eval(r, dirty)];
                ++count;
                if (table.size() > options.value_budget) {
                    classes_seen += count;
                    values_seen += table.size();
                    throw BudgetHit{};
                }
            });
            visited[i] = count;
            classes_seen += count;
            values_seen += table.size();
        });
    } catch (const BudgetHit&) {
        throw MemoryBudgetExceeded(PartialCensus{classes_seen.load(), values_seen.load(), false},
                                   options.value_budget);
    }

    Table merged = std::move(tables.front());
    for (std::size_t i = 1; i < tables.size(); ++i) {
        for (auto& [value, count] : tables[i]) merged[value] += count;
        Table().swap(tables[i]);
        if (merged.size() > options.value_budget) {
            throw MemoryBudgetExceeded(PartialCensus{classes_seen.load(), merged.size(), false},
                                       options.value_budget);
        }
    }

    ValueCounts out;
    for (auto c : visited) out.classes += c;
    std::vector<std::pair<V, std::uint64_t>> sorted(merged.begin(), merged.end());
    Table().swap(merged);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.entries.reserve(sorted.size());
    for (auto& [value, count] : sorted) out.entries.emplace_back(detail::to_big(value), count);
    return out;
}

template <class V, class Hash>
std::map<BigNat, std::vector<CanonicalWord>> collect_words_as(const ClassSpace& space,
                                                              const std::vector<BigNat>& targets,
                                                              std::size_t cap, unsigned workers) {
    std::unordered_set<V, Hash> wanted;
    for (const auto& t : targets) {
        if constexpr (std::is_same_v<V, BigNat>) {
            wanted.insert(t);
        } else {
            // Targets above the class bound cannot occur.
            if (mpz_sizeinbase(t.get_mpz_t(), 2) <= 127) {
                const BigNat hi = t >> 64;
                const BigNat lo = t - (hi << 64);
                wanted.insert((static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui());
            }
        }
    }
    using Found = std::unordered_map<V, std::vector<std::vector<Rank>>, Hash>;
    const auto shards = detail::make_shards(space);
    std::vector<Found> found(shards.size());
    detail::run_sharded(shards.size(), workers, [&](std::size_t i) {
        detail::PrefixContinuant<V> k(space.letters, space.n);
        detail::enumerate_shard(space, shards[i], [&](std::span<const Rank> r, std::size_t dirty) {
            const V& value = k.eval(r, dirty);
            if (!wanted.contains(value)) return;
            auto& words = found[i][value];
            if (words.size() < cap) words.emplace_back(r.begin(), r.end());
        });
    });

    std::map<BigNat, std::vector<CanonicalWord>> out;
    for (const auto& shard : found) {
        for (const auto& [value, words] : shard) {
            auto& dest = out[detail::to_big(value)];
            for (const auto& r : words) {
                if (dest.size() >= cap) break;
                dest.push_back(canonical_unchecked(detail::ranks_to_letters(space, r)));
            }
        }
    }
    return out;
}

}  // namespace

ValueCounts count_values(const Alphabet& alphabet, const ParikhVector& parikh, const CensusOptions& options) {
    require_aligned(alphabet, parikh);
    require_enumerable(parikh, options.enumeration_limit);
    const ClassSpace space(alphabet, parikh);
    ValueCounts out = space.fits_u128(continuant_upper_bound(alphabet, parikh))
                          ? count_values_as<u128, U128Hash>(space, options)
                          : count_values_as<BigNat, BigNatHash>(space, options);
    if (BigNat(static_cast<unsigned long>(out.classes)) != exact_class_count(parikh)) {
        throw Error("census: enumerated " + std::to_string(out.classes) + " classes but expected " +
                    to_decimal(exact_class_count(parikh)));
    }
    return out;
}

std::map<BigNat, std::vector<CanonicalWord>> collect_words(const Alphabet& alphabet, const ParikhVector& parikh,
                                                           const std::vector<BigNat>& targets,
                                                           std::size_t per_value_cap,
                                                           const CensusOptions& options) {
    require_aligned(alphabet, parikh);
    require_enumerable(parikh, options.enumeration_limit);
    if (targets.empty() || per_value_cap == 0) return {};
    const ClassSpace space(alphabet, parikh);
    // Shards are visited in lexicographic order, so the merged lists are
    // sorted; reassemble by shard index, not completion order.
    auto out = space.fits_u128(continuant_upper_bound(alphabet, parikh))
                   ? collect_words_as<u128, U128Hash>(space, targets, per_value_cap, options.workers)
                   : collect_words_as<BigNat, BigNatHash>(space, targets, per_value_cap, options.workers);
    return out;
}

CensusReport run_census(const Alphabet& alphabet, const ParikhVector& parikh, const CensusOptions& options) {
    const ValueCounts counts = count_values(alphabet, parikh, options);

    CensusReport report{alphabet, parikh, exact_class_count(parikh), BigNat(0), {}, 0, {}, 0, 0};
    report.distinct_values = static_cast<unsigned long>(counts.entries.size());
    for (const auto& [value, mu] : counts.entries) {
        ++report.spectrum[mu];
        report.max_multiplicity = std::max(report.max_multiplicity, mu);
    }
    report.min_value = counts.entries.front().first;
    report.max_value = counts.entries.back().first;

    // Top-k multiplicities, each with its smallest values.
    std::vector<BigNat> targets;
    std::size_t levels = 0;
    for (auto it = report.spectrum.rbegin(); it != report.spectrum.rend() && levels < options.witness_top_k;
         ++it, ++levels) {
        WitnessGroup group;
        group.multiplicity = it->first;
        for (const auto& [value, mu] : counts.entries) {
            if (mu != it->first) continue;
            group.values.push_back({value, {}});
            targets.push_back(value);
            if (group.values.size() >= options.witnesses_per_multiplicity) break;
        }
        report.witnesses.push_back(std::move(group));
    }
    auto words = collect_words(alphabet, parikh, targets, options.witnesses_per_multiplicity, options);
    for (auto& group : report.witnesses) {
        for (auto& vw : group.values) vw.words = std::move(words[vw.value]);
    }
    return report;
}

std::uint64_t multiplicity_of(const Word& w, const CensusOptions& options) {
    if (w.empty()) return 1;
    auto [alphabet, parikh] = abelian_class_of(w);
    return count_values(alphabet, parikh, options).count_of(continuant(w));
}

}  // namespace contin
