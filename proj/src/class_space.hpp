#pragma once

// Sharded lexicographic enumeration of an Abelian class up to reversal, with
// incremental continuant evaluation. Internal to the library.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "contin/bignat.hpp"
#include "contin/word.hpp"

namespace contin::detail {

using Rank = std::uint32_t;
using u128 = unsigned __int128;

struct U128Hash {
    std::size_t operator()(u128 v) const noexcept {
        const auto lo = static_cast<std::uint64_t>(v);
        const auto hi = static_cast<std::uint64_t>(v >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

struct BigNatHash {
    std::size_t operator()(const BigNat& v) const noexcept {
        const auto* z = v.get_mpz_t();
        std::size_t h = static_cast<std::size_t>(z->_mp_size);
        for (int i = 0; i < std::abs(z->_mp_size); ++i) {
            h ^= static_cast<std::size_t>(z->_mp_d[i]) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline BigNat to_big(u128 v) { return from_u128(v); }
inline BigNat to_big(const BigNat& v) { return v; }

/// Alphabet letters plus Parikh counts, indexed by rank.
struct ClassSpace {
    std::vector<Letter> letters;
    std::vector<Count> counts;
    std::size_t n = 0;

    ClassSpace(const Alphabet& alphabet, const ParikhVector& parikh)
        : letters(alphabet.letters().begin(), alphabet.letters().end()),
          counts(parikh.counts().begin(), parikh.counts().end()),
          n(parikh.length()) {}

    /// True when every value in the class fits below 2^127 (so a*k + k' cannot wrap).
    bool fits_u128(const BigNat& upper_bound) const {
        return mpz_sizeinbase(upper_bound.get_mpz_t(), 2) <= 126;
    }
};

/// Shards are fixed rank prefixes of length 0, 1 or 2 listed in lexicographic
/// order, so concatenating shard outputs in index order is globally sorted.
inline std::vector<std::vector<Rank>> make_shards(const ClassSpace& space) {
    std::vector<std::vector<Rank>> shards;
    const auto s = static_cast<Rank>(space.counts.size());
    if (space.n < 3 || s < 2) {
        shards.push_back({});
        return shards;
    }
    for (Rank a = 0; a < s; ++a) {
        for (Rank b = 0; b < s; ++b) {
            if (a == b && space.counts[a] < 2) continue;
            shards.push_back({a, b});
        }
    }
    return shards;
}

/// Next lexicographic permutation of r[lo..). Returns the leftmost changed
/// index, or r.size() once the last permutation has been passed.
inline std::size_t next_multiset_permutation(std::span<Rank> r, std::size_t lo) {
    const std::size_t n = r.size();
    if (n < lo + 2) return n;
    std::size_t i = n - 2;
    while (r[i] >= r[i + 1]) {
        if (i == lo) return n;
        --i;
    }
    std::size_t j = n - 1;
    while (r[j] <= r[i]) --j;
    std::swap(r[i], r[j]);
    std::reverse(r.begin() + static_cast<std::ptrdiff_t>(i) + 1, r.end());
    return i;
}

inline bool ranks_canonical(std::span<const Rank> r) {
    for (std::size_t i = 0, j = r.size(); i + 1 < j; ++i) {
        --j;
        if (r[i] != r[j]) return r[i] < r[j];
    }
    return true;
}

/// Prefix continuants K(w_1..w_i) kept across consecutive permutations;
/// only positions at or after the first changed index are recomputed.
template <class V>
class PrefixContinuant {
public:
    PrefixContinuant(std::span<const Letter> letters, std::size_t n) : letters_(letters), k_(n + 1) { k_[0] = 1; }

    const V& eval(std::span<const Rank> r, std::size_t dirty) {
        for (std::size_t i = dirty; i < r.size(); ++i) step(i, letters_[r[i]]);
        return k_[r.size()];
    }

private:
    void step(std::size_t i, Letter x) {
        if constexpr (std::is_same_v<V, BigNat>) {
            mpz_mul_ui(k_[i + 1].get_mpz_t(), k_[i].get_mpz_t(), x);
            if (i > 0) k_[i + 1] += k_[i - 1];
        } else {
            k_[i + 1] = static_cast<V>(x) * k_[i] + (i > 0 ? k_[i - 1] : V{0});
        }
    }

    std::span<const Letter> letters_;
    std::vector<V> k_;
};

/// Enumerates the canonical words of one shard in lexicographic order.
/// `visit(ranks, dirty)` receives the first index changed since its previous call.
template <class Visit>
void enumerate_shard(const ClassSpace& space, std::span<const Rank> prefix, Visit&& visit) {
    std::vector<Count> remaining = space.counts;
    std::vector<Rank> r;
    r.reserve(space.n);
    for (Rank p : prefix) {
        if (remaining[p] == 0) return;
        --remaining[p];
        r.push_back(p);
    }
    for (Rank a = 0; a < remaining.size(); ++a) r.insert(r.end(), remaining[a], a);
    // A canonical word starts with a letter no larger than its last one.
    if (!prefix.empty() && prefix.front() > r.back()) return;

    std::size_t dirty = 0;
    const std::size_t lo = prefix.size();
    while (true) {
        if (ranks_canonical(r)) {
            visit(std::span<const Rank>(r), dirty);
            dirty = r.size();
        }
        const std::size_t pivot = next_multiset_permutation(r, lo);
        if (pivot == r.size()) break;
        dirty = std::min(dirty, pivot);
    }
}

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(shard_index) for every shard on up to `workers` threads. The first
/// exception raised by any shard is rethrown after all threads have joined.
template <class Fn>
void run_sharded(std::size_t shard_count, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), shard_count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < shard_count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= shard_count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed = true;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

inline std::vector<Letter> ranks_to_letters(const ClassSpace& space, std::span<const Rank> r) {
    std::vector<Letter> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = space.letters[r[i]];
    return out;
}

}  // namespace contin::detail
