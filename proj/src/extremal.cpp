#include "contin/extremal.hpp"

#include <algorithm>

#include "class_space.hpp"
#include "contin/core.hpp"
#include "contin/errors.hpp"

namespace contin {

Word build_w_max(const Alphabet& alphabet, const ParikhVector& parikh) {
    require_aligned(alphabet, parikh);
    const std::size_t s = alphabet.size();
    std::vector<Letter> out;
    out.reserve(parikh.length());
    auto block = [&](std::size_t i) { out.insert(out.end(), parikh[i] - 1, alphabet[i]); };
    // Ranks are 0-based here; s - i in 1-based terms is (s - 1) - i.
    for (std::size_t i = s; i-- > 0;) {
        if ((s - 1 - i) % 2 == 0) {
            out.push_back(alphabet[i]);
        } else {
            block(i);
        }
    }
    for (std::size_t i = 0; i < s; ++i) {
        if ((s - 1 - i) % 2 == 0) {
            block(i);
        } else {
            out.push_back(alphabet[i]);
        }
    }
    return Word(std::move(out));
}

namespace {

template <class V>
struct Extremes {
    bool any = false;
    V max{};
    V min{};
    std::vector<std::vector<detail::Rank>> argmax;
    std::vector<std::vector<detail::Rank>> argmin;

    void offer(const V& value, std::span<const detail::Rank> r) {
        if (!any || value > max) {
            max = value;
            argmax.clear();
        }
        if (value == max) argmax.emplace_back(r.begin(), r.end());
        if (!any || value < min) {
            min = value;
            argmin.clear();
        }
        if (value == min) argmin.emplace_back(r.begin(), r.end());
        any = true;
    }
};

template <class V>
ExtremalResult extrema_as(const detail::ClassSpace& space, unsigned workers) {
    const auto shards = detail::make_shards(space);
    std::vector<Extremes<V>> parts(shards.size());
    detail::run_sharded(shards.size(), workers, [&](std::size_t i) {
        detail::PrefixContinuant<V> k(space.letters, space.n);
        detail::enumerate_shard(space, shards[i], [&](std::span<const detail::Rank> r, std::size_t dirty) {
            parts[i].offer(k.eval(r, dirty), r);
        });
    });
    // Merge in shard order so witness lists stay lexicographically sorted.
    Extremes<V> all;
    for (auto& part : parts) {
        if (!part.any) continue;
        if (!all.any || part.max > all.max) {
            all.max = part.max;
            all.argmax.clear();
        }
        if (part.max == all.max) all.argmax.insert(all.argmax.end(), part.argmax.begin(), part.argmax.end());
        if (!all.any || part.min < all.min) {
            all.min = part.min;
            all.argmin.clear();
        }
        if (part.min == all.min) all.argmin.insert(all.argmin.end(), part.argmin.begin(), part.argmin.end());
        all.any = true;
    }
    ExtremalResult out;
    out.max_value = detail::to_big(all.max);
    out.min_value = detail::to_big(all.min);
    for (const auto& r : all.argmax) out.argmax.push_back(canonical_unchecked(detail::ranks_to_letters(space, r)));
    for (const auto& r : all.argmin) out.argmin.push_back(canonical_unchecked(detail::ranks_to_letters(space, r)));
    return out;
}

}  // namespace

ExtremalResult brute_force_extrema(const Alphabet& alphabet, const ParikhVector& parikh,
                                   const CensusOptions& options) {
    require_aligned(alphabet, parikh);
    require_enumerable(parikh, options.enumeration_limit);
    const detail::ClassSpace space(alphabet, parikh);
    if (space.fits_u128(continuant_upper_bound(alphabet, parikh))) {
        return extrema_as<detail::u128>(space, options.workers);
    }
    return extrema_as<BigNat>(space, options.workers);
}

bool verify_wmax(const Alphabet& alphabet, const ParikhVector& parikh, const CensusOptions& options) {
    const CanonicalWord built = canonicalize(build_w_max(alphabet, parikh));
    const ExtremalResult oracle = brute_force_extrema(alphabet, parikh, options);
    return oracle.argmax.size() == 1 && oracle.argmax.front() == built;
}

}  // namespace contin
