#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contin/core.hpp"
#include "contin/errors.hpp"
#include "contin/extremal.hpp"
#include "oracles.hpp"

using namespace contin;

namespace {

oracle::Letters as_letters(std::span<const Letter> w) { return {w.begin(), w.end()}; }

std::vector<Count> ranks_pattern(const Alphabet& a, const Word& w) {
    std::vector<Count> out;
    for (Letter x : w.letters()) out.push_back(static_cast<Count>(*a.rank_of(x)));
    return out;
}

}  // namespace

TEST_CASE("build_w_max examples") {
    CHECK(build_w_max(Alphabet({1, 2}), ParikhVector({2, 2})) == Word{2, 1, 1, 2});
    CHECK(build_w_max(Alphabet({7}), ParikhVector({3})) == Word{7, 7, 7});
    CHECK(build_w_max(Alphabet({1, 2, 3}), ParikhVector({1, 1, 1})) == Word{3, 1, 2});
}

TEST_CASE("build_w_max reproduces the equipartitioned interval pattern") {
    // s (s-1)^{m-1} (s-2) ... 1 1^{m-1} ... (s-2)^{m-1} (s-1) s^{m-1}
    for (unsigned s = 1; s <= 7; ++s) {
        for (Count m = 1; m <= 4; ++m) {
            std::vector<Letter> left, right;
            for (unsigned i = s; i >= 1; --i) {
                if ((s - i) % 2 == 0) {
                    left.push_back(i);
                } else {
                    left.insert(left.end(), m - 1, i);
                }
            }
            for (unsigned i = 1; i <= s; ++i) {
                if ((s - i) % 2 == 0) {
                    right.insert(right.end(), m - 1, i);
                } else {
                    right.push_back(i);
                }
            }
            left.insert(left.end(), right.begin(), right.end());
            CAPTURE(s);
            CAPTURE(m);
            CHECK(build_w_max(Alphabet::interval(s), ParikhVector::equipartitioned(s, m)) == Word(left));
        }
    }
    // explicit s = 4, m = 3: 4 33 2 11 1 22 3 44
    CHECK(build_w_max(Alphabet::interval(4), ParikhVector::equipartitioned(4, 3)) ==
          Word{4, 3, 3, 2, 1, 1, 1, 2, 2, 3, 4, 4});
}

TEST_CASE("build_w_max errors") {
    CHECK_THROWS_AS(build_w_max(Alphabet({1, 2, 3}), ParikhVector({1, 2})), ValidationError);
    CHECK_THROWS_AS(ParikhVector({1, 0}), ValidationError);
}

TEST_CASE("Parikh preservation and middle block") {
    for (const auto& letters : oracle::alphabets(6, 1, 4)) {
        const Alphabet a(letters);
        for (const auto& p : oracle::parikh_vectors(letters.size(), 10)) {
            const ParikhVector parikh(p);
            const Word w = build_w_max(a, parikh);
            auto [ca, cp] = abelian_class_of(w);
            REQUIRE(ca == a);
            REQUIRE(cp == parikh);
            // a_1 occurs as exactly one run of length p_1
            std::size_t runs = 0, longest = 0, cur = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] == a[0]) {
                    if (cur == 0) ++runs;
                    longest = std::max(longest, ++cur);
                } else {
                    cur = 0;
                }
            }
            REQUIRE(runs == 1);
            REQUIRE(longest == p[0]);
        }
    }
}

TEST_CASE("rank pattern does not depend on letter values") {
    const Alphabet small({1, 2, 3}), spread({2, 5, 9}), far({10, 200, 3000});
    for (const auto& p : oracle::parikh_vectors(3, 12)) {
        const ParikhVector parikh(p);
        const auto pattern = ranks_pattern(small, build_w_max(small, parikh));
        REQUIRE(pattern == ranks_pattern(spread, build_w_max(spread, parikh)));
        REQUIRE(pattern == ranks_pattern(far, build_w_max(far, parikh)));
    }
}

TEST_CASE("brute_force_extrema examples") {
    auto r = brute_force_extrema(Alphabet({1, 2}), ParikhVector({2, 2}));
    CHECK(r.max_value == 13);
    CHECK(r.min_value == 10);
    REQUIRE(r.argmax.size() == 1);
    REQUIRE(r.argmin.size() == 1);
    CHECK(r.argmax.front().word() == Word{2, 1, 1, 2});
    CHECK(r.argmin.front().word() == Word{1, 2, 2, 1});

    r = brute_force_extrema(Alphabet({1, 2}), ParikhVector({1, 1}));
    CHECK(r.max_value == 3);
    CHECK(r.min_value == 3);
    CHECK(r.argmax == r.argmin);

    // classes 123 -> 10, 132 -> 9, 213 -> 11; the max is the canonical form of 312
    r = brute_force_extrema(Alphabet({1, 2, 3}), ParikhVector({1, 1, 1}));
    CHECK(r.max_value == 11);
    REQUIRE(r.argmax.size() == 1);
    CHECK(r.argmax.front() == canonicalize(Word{3, 1, 2}));
    CHECK(r.min_value == 9);
}

TEST_CASE("brute_force_extrema matches a raw-permutation oracle") {
    for (const auto& letters : oracle::alphabets(5, 2, 3)) {
        for (const auto& p : oracle::parikh_vectors(letters.size(), 7)) {
            std::uint64_t best = 0, worst = UINT64_MAX;
            std::set<oracle::Letters> best_set, worst_set;
            for (const auto& w : oracle::reversal_classes(letters, p)) {
                const auto k = oracle::continuant_from_left(w);
                if (k > best) best_set.clear(), best = k;
                if (k == best) best_set.insert(w);
                if (k < worst) worst_set.clear(), worst = k;
                if (k == worst) worst_set.insert(w);
            }
            const auto r = brute_force_extrema(Alphabet(letters), ParikhVector(p));
            REQUIRE(r.max_value == BigNat(best));
            REQUIRE(r.min_value == BigNat(worst));
            std::set<oracle::Letters> got_best, got_worst;
            for (const auto& w : r.argmax) got_best.insert(as_letters(w.letters()));
            for (const auto& w : r.argmin) got_worst.insert(as_letters(w.letters()));
            REQUIRE(got_best == best_set);
            REQUIRE(got_worst == worst_set);
        }
    }
}

TEST_CASE("brute_force_extrema is independent of worker count") {
    CensusOptions one, many;
    many.workers = 6;
    const Alphabet a({1, 3, 4, 6});
    const ParikhVector p({3, 2, 2, 2});
    const auto r1 = brute_force_extrema(a, p, one);
    const auto r6 = brute_force_extrema(a, p, many);
    CHECK(r1.argmax == r6.argmax);
    CHECK(r1.argmin == r6.argmin);
    CHECK(r1.max_value == r6.max_value);
    CHECK(r1.min_value == r6.min_value);
}

TEST_CASE("brute_force_extrema respects the enumeration limit") {
    CensusOptions tight;
    tight.enumeration_limit = 47;
    try {
        brute_force_extrema(Alphabet({1, 2, 3}), ParikhVector({2, 2, 2}), tight);
        FAIL("expected LimitExceeded");
    } catch (const LimitExceeded& e) {
        CHECK(e.class_size() == 48);
        CHECK(e.limit() == 47);
    }
    tight.enumeration_limit = 48;
    CHECK_NOTHROW(brute_force_extrema(Alphabet({1, 2, 3}), ParikhVector({2, 2, 2}), tight));
}

TEST_CASE("verify_wmax examples") {
    CHECK(verify_wmax(Alphabet({1, 2}), ParikhVector({2, 2})));
    CHECK(verify_wmax(Alphabet({1, 2, 3}), ParikhVector({2, 2, 2})));
    for (Count k = 1; k <= 6; ++k) CHECK(verify_wmax(Alphabet({4}), ParikhVector({k})));
}

TEST_CASE("verify_wmax sweep: alphabets within {1..6}, up to 4 letters, n <= 9") {
    // The full n <= 10 sweep runs in the acceptance suite.
    std::size_t cases = 0;
    for (const auto& letters : oracle::alphabets(6, 1, 4)) {
        for (const auto& p : oracle::parikh_vectors(letters.size(), 9)) {
            CAPTURE(oracle::Letters(letters));
            REQUIRE(verify_wmax(Alphabet(letters), ParikhVector(p)));
            ++cases;
        }
    }
    CHECK(cases > 1000);
}

TEST_CASE("W_max beyond 128-bit values uses the exact path") {
    // Few classes, huge values: class {1^1, 1000^30}
    const Alphabet a({1, 1000});
    const ParikhVector p({2, 30});
    CHECK(verify_wmax(a, p));
    const auto r = brute_force_extrema(a, p);
    CHECK(r.max_value == continuant(build_w_max(a, p)));
    CHECK(mpz_sizeinbase(r.max_value.get_mpz_t(), 2) > 200);
}
