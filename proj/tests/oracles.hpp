#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's evaluation or enumeration paths.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Letters = std::vector<std::uint64_t>;

/// K expanded from the left end: K(w_1..w_n) = w_1 K(w_2..w_n) + K(w_3..w_n).
/// Unsigned 64-bit; callers keep inputs small.
inline std::uint64_t continuant_from_left(const Letters& w, std::size_t from = 0) {
    if (from >= w.size()) return 1;
    if (from + 1 == w.size()) return w[from];
    return w[from] * continuant_from_left(w, from + 1) + continuant_from_left(w, from + 2);
}

/// Leibniz expansion of the tridiagonal determinant (diagonal w, super -1, sub 1).
inline long long leibniz_determinant(const Letters& w) {
    const std::size_t n = w.size();
    auto entry = [&](std::size_t i, std::size_t j) -> long long {
        if (i == j) return static_cast<long long>(w[i]);
        if (j == i + 1) return -1;
        if (i == j + 1) return 1;
        return 0;
    };
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long det = 0;
    do {
        long long term = 1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= entry(i, perm[i]);
        if (term == 0) continue;
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        det += (inversions % 2 ? -term : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline std::uint64_t fibonacci(unsigned k) {  // F(1) = F(2) = 1
    std::uint64_t a = 0, b = 1;
    for (unsigned i = 0; i < k; ++i) {
        const auto c = a + b;
        a = b;
        b = c;
    }
    return a;
}

inline Letters sorted_word(const Letters& alphabet, const std::vector<std::uint32_t>& parikh) {
    Letters w;
    for (std::size_t i = 0; i < alphabet.size(); ++i) w.insert(w.end(), parikh[i], alphabet[i]);
    return w;
}

/// All reversal classes, via every raw permutation and min(w, reverse(w)).
inline std::set<Letters> reversal_classes(const Letters& alphabet, const std::vector<std::uint32_t>& parikh) {
    Letters w = sorted_word(alphabet, parikh);
    std::set<Letters> out;
    do {
        Letters r(w.rbegin(), w.rend());
        out.insert(std::min(w, r));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::uint64_t raw_permutation_count(const std::vector<std::uint32_t>& parikh) {
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < parikh.size(); ++i) ranks.insert(ranks.end(), parikh[i], i);
    std::uint64_t count = 0;
    do ++count;
    while (std::next_permutation(ranks.begin(), ranks.end()));
    return count;
}

/// value -> number of reversal classes attaining it
inline std::map<std::uint64_t, std::uint64_t> value_counts(const Letters& alphabet,
                                                           const std::vector<std::uint32_t>& parikh) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& w : reversal_classes(alphabet, parikh)) ++out[continuant_from_left(w)];
    return out;
}

/// Every Parikh vector with entries >= 1 and total length <= max_n.
inline std::vector<std::vector<std::uint32_t>> parikh_vectors(std::size_t letters, std::size_t max_n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> p(letters, 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == letters) {
            out.push_back(p);
            return;
        }
        const std::size_t reserve = letters - i - 1;
        for (std::size_t c = 1; used + c + reserve <= max_n; ++c) {
            p[i] = static_cast<std::uint32_t>(c);
            rec(i + 1, used + c);
        }
    };
    if (letters <= max_n) rec(0, 0);
    return out;
}

/// Every subset of {1..max_letter} with between lo and hi elements, ascending.
inline std::vector<Letters> alphabets(std::uint64_t max_letter, std::size_t lo, std::size_t hi) {
    std::vector<Letters> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << max_letter); ++mask) {
        Letters a;
        for (std::uint64_t x = 0; x < max_letter; ++x)
            if (mask >> x & 1) a.push_back(x + 1);
        if (a.size() >= lo && a.size() <= hi) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Seed from CONTIN_SEED when set, so randomized suites are reproducible.
inline std::uint64_t test_seed(std::uint64_t fallback = 20240229) {
    if (const char* s = std::getenv("CONTIN_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

}  // namespace oracle
