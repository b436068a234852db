// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "contin/contin.hpp"
#include "oracles.hpp"

using namespace contin;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Word random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len, Letter max_letter) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<Letter> letter(1, max_letter);
    std::vector<Letter> v(len(rng));
    for (auto& x : v) x = letter(rng);
    return Word(std::move(v));
}

BigNat factorial_of(std::size_t n) {
    BigNat f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

// 1. build_w_max equals the unique brute-force argmax
Outcome extremal_sweep() {
    std::uint64_t cases = 0;
    for (const auto& letters : oracle::alphabets(6, 2, 4)) {
        for (const auto& p : oracle::parikh_vectors(letters.size(), 10)) {
            const Alphabet a(letters);
            const ParikhVector parikh(p);
            const auto r = brute_force_extrema(a, parikh);
            const auto expected = canonicalize(build_w_max(a, parikh));
            if (r.argmax.size() != 1) {
                return fail("argmax not unique for alphabet " + format_word(letters) + " parikh " + format_list(p));
            }
            if (!(r.argmax.front() == expected)) {
                return fail("mismatch for alphabet " + format_word(letters) + " parikh " + format_list(p));
            }
            ++cases;
        }
    }
    return {true, std::to_string(cases) + " classes, 100% agreement, argmax unique"};
}

// 2. {1,2}, p=(2,2) golden, identical under 1 and 8 workers
Outcome desk_golden() {
    const Alphabet a({1, 2});
    const ParikhVector p({2, 2});
    CensusOptions one, eight;
    eight.workers = 8;
    const auto r1 = run_census(a, p, one);
    const auto r8 = run_census(a, p, eight);
    if (r1.class_size != 4 || r1.distinct_values != 4) return fail("N or P wrong");
    std::vector<BigNat> values;
    for (const auto& w : enumerate_classes(a, p)) values.push_back(continuant(w.word()));
    std::sort(values.begin(), values.end());
    if (values != std::vector<BigNat>{10, 11, 12, 13}) return fail("value set is not {10,11,12,13}");
    const auto ext = brute_force_extrema(a, p);
    if (ext.max_value != 13 || ext.argmax.size() != 1 || !(ext.argmax.front().word() == Word{2, 1, 1, 2}))
        return fail("max is not 2112 with K=13");
    if (!(r1 == r8)) return fail("1 and 8 workers disagree");
    if (render(r1, OutputFormat::json) != render(r8, OutputFormat::json)) return fail("rendered output differs");
    return {true, "N=4 P=4 values {10,11,12,13} max 2,1,1,2 (K=13); 1 vs 8 workers bit-identical"};
}

// 3. Q_{r,j-1} < (r+1)^j
Outcome q_growth() {
    for (unsigned long r = 1; r <= 20; ++r) {
        BigNat prev = 0, cur = 1;  // independent recurrence: Q_{r,-1} = 0, Q_{r,0} = 1
        for (std::uint64_t j = 1; j <= 200; ++j) {
            if (generalized_fibonacci(static_cast<unsigned>(r), j - 1) != cur) return fail("Q mismatch");
            if (!(cur < big_pow(BigNat(r + 1), j))) return fail("Q growth bound fails at r=" + std::to_string(r));
            BigNat next = r * cur + prev;
            prev = cur;
            cur = next;
        }
    }
    return {true, "4000 pairs, exact arithmetic"};
}

// 4. P <= W_max < 2^{2s} s! ((s+1)!)^m
Outcome bound_chain() {
    std::ostringstream detail;
    for (unsigned s = 2; s <= 3; ++s) {
        for (Count m = 1; m <= 2; ++m) {
            const Alphabet a = Alphabet::interval(s);
            const ParikhVector p = ParikhVector::equipartitioned(s, m);
            const auto census = run_census(a, p);
            const BigNat wmax = continuant(build_w_max(a, p));
            const BigNat bound = big_pow(2, 2 * s) * factorial_of(s) * big_pow(factorial_of(s + 1), m);
            if (bound != p_upper_bound(s, m)) return fail("p_upper_bound formula mismatch");
            if (wmax != census.max_value) return fail("W_max is not the census maximum");
            if (!(census.distinct_values <= wmax && wmax < bound)) return fail("chain broken");
            detail << " s=" << s << ",m=" << m << ":" << to_decimal(census.distinct_values) << "<=" << to_decimal(wmax)
                   << "<" << to_decimal(bound);
        }
    }
    return {true, detail.str().substr(1)};
}

// 5. class-count identities for n <= 11 over <= 4 letters
Outcome class_counts() {
    std::uint64_t classes = 0, vectors = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
        oracle::Letters letters;
        for (std::size_t i = 1; i <= k; ++i) letters.push_back(i);
        for (const auto& p : oracle::parikh_vectors(k, 11)) {
            const ParikhVector parikh(p);
            std::size_t n = 0;
            BigNat denom = 1;
            for (auto c : p) n += c, denom *= factorial_of(c);
            const BigNat multinomial = factorial_of(n) / denom;
            // palindromes: at most one odd count, then arrange the halves
            std::size_t odd = 0;
            BigNat half_denom = 1;
            for (auto c : p) odd += c % 2, half_denom *= factorial_of(c / 2);
            const BigNat palindromes = odd <= 1 ? factorial_of(n / 2) / half_denom : BigNat(0);
            const BigNat expected = (multinomial + palindromes) / 2;
            const BigNat count = exact_class_count(parikh);
            const auto listed = enumerate_classes(Alphabet(letters), parikh);
            if (BigNat(static_cast<unsigned long>(listed.size())) != count || count != expected)
                return fail("count mismatch at parikh " + format_list(p));
            // N >= n!/(2 prod p_i!), equality iff no palindrome
            const BigNat twice = 2 * count * denom;
            if (twice < factorial_of(n)) return fail("lower bound fails at " + format_list(p));
            if ((twice == factorial_of(n)) != (palindromes == 0)) return fail("equality case wrong at " + format_list(p));
            classes += listed.size();
            ++vectors;
        }
    }
    return {true, std::to_string(vectors) + " Parikh vectors, " + std::to_string(classes) + " classes enumerated"};
}

// 6. m0(2) = 345 and smallest_admissible_s(1,1) = 4 with independent oracles
Outcome thresholds() {
    // exact upward search for 32 * 99^m <= 100^m
    std::uint64_t m = 1;
    BigNat lhs = 32 * 99, rhs = 100;
    while (lhs > rhs) lhs *= 99, rhs *= 100, ++m;
    if (m != 345 || m0(2) != 345) return fail("m0(2) = " + std::to_string(m0(2)) + ", oracle " + std::to_string(m));
    // H(1,1,s) = (363/800) e^s / (sqrt(2 pi (s+1)) s), long double with a wide margin
    auto H = [](long double s) {
        return 363.0L / 800.0L * std::exp(s) / (std::sqrt(2 * 3.14159265358979323846L * (s + 1)) * s);
    };
    if (!(H(3) < 0.7L && H(4) > 1.05L)) return fail("oracle H does not straddle 1 between s=3 and s=4");
    if (H_value(1, 1, 3).compare(Rational(1)) != Certainty::below ||
        H_value(1, 1, 4).compare(Rational(1)) != Certainty::above)
        return fail("certified H disagrees with the oracle");
    if (s0(1, 1) != 1) return fail("s0(1,1) != 1");
    if (smallest_admissible_s(1, 1) != 4) return fail("smallest_admissible_s(1,1) != 4");
    return {true, "m0(2)=345 (exact search), smallest_admissible_s(1,1)=4 (H(1,1,3)~0.606 < 1 < H(1,1,4)~1.105)"};
}

// 7. Stirling sandwich for 1 <= n <= 200
Outcome stirling() {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        if (!stirling_brackets_factorial(n)) return fail("fails at n=" + std::to_string(n));
        // cross-check with lgamma where long double has room
        if (n <= 150) {
            const long double x = static_cast<long double>(n);
            const long double log_fact = std::lgamma(x + 1);
            const long double log_low = -x + x * std::log(x) + 0.5L * std::log(2 * 3.14159265358979323846L * x);
            const long double log_high = log_low + std::log(12.0L / 11.0L);
            if (!(log_low < log_fact && log_fact < log_high)) return fail("lgamma oracle disagrees at " + std::to_string(n));
        }
    }
    return {true, "n = 1..200 certified against exact factorials"};
}

// 8. property suites, 10^4 randomized cases each
Outcome properties(std::uint64_t seed) {
    constexpr int cases = 10000;
    std::mt19937_64 rng(seed);
    int degenerate = 0;
    for (int i = 0; i < cases; ++i) {
        const Word w = random_word(rng, 1, 16, 12);
        if (continuant(w) != continuant(w.reversed())) return fail("reversal invariance");
        for (std::size_t j = 1; j < w.size(); ++j) {
            const auto sides = split_identity(w, j);
            if (sides.lhs != sides.rhs) return fail("split identity at j=" + std::to_string(j));
            if (w.size() == 2 && w[0] == 1 && w[1] == 1) {
                ++degenerate;
                continue;
            }
            if (!doubling_bound_check(w, j)) return fail("doubling bound on " + format_word(w));
        }
    }
    for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<std::size_t> letters_dist(1, 4);
        const std::size_t k = letters_dist(rng);
        std::vector<Letter> pool{1, 2, 3, 4, 5, 6, 7};
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Letter> letters(pool.begin(), pool.begin() + static_cast<long>(k));
        std::sort(letters.begin(), letters.end());
        std::uniform_int_distribution<Count> count_dist(1, 3);
        std::vector<Count> p(k);
        for (auto& c : p) c = count_dist(rng);
        const auto values = count_values(Alphabet(letters), ParikhVector(p));
        std::uint64_t mu = 0;
        for (const auto& [v, c] : values.entries) mu = std::max(mu, c);
        const BigNat N = exact_class_count(ParikhVector(p));
        const BigNat P = static_cast<unsigned long>(values.entries.size());
        if (BigNat(static_cast<unsigned long>(mu)) * P < N) return fail("pigeonhole floor");
    }
    return {true, "seed " + std::to_string(seed) + ": 4 x 10000 cases (" + std::to_string(degenerate) +
                      " degenerate 1,1 cuts excluded from the doubling bound)"};
}

// 9. the asymptotic regime is out of reach; check deterministic scans instead
Outcome desk_scale_statement() {
    const BigNat n_at_m0 = exact_class_count(ParikhVector::equipartitioned(2, static_cast<Count>(m0(2))));
    const std::size_t digits = to_decimal(n_at_m0).size();
    CensusOptions one, eight;
    eight.workers = 8;
    const auto a = growing_multiplicity_scan(Alphabet({1, 2, 3}), 1, 3, one);
    const auto b = growing_multiplicity_scan(Alphabet({1, 2, 3}), 1, 3, eight);
    const auto c = growing_multiplicity_scan(Alphabet({1, 2, 3}), 1, 3, one);
    if (!(a == b && a == c)) return fail("scan is not deterministic");
    const auto s1 = exact_multiplicity_search(Alphabet({1, 2, 3, 4}), 2, 5124, one);
    const auto s8 = exact_multiplicity_search(Alphabet({1, 2, 3, 4}), 2, 5124, eight);
    if (!(s1.records == s8.records)) return fail("exact search is not deterministic");
    if (digits < 200) return fail("class size at m0(2) unexpectedly small");
    std::ostringstream os;
    os << "not reproducible at desk scale: m0(2)=345 gives N with " << digits
       << " digits, so mu_k -> infinity is not enumerated; checked instead: criteria 4, 5, 8 and deterministic "
          "scans (max mu for {1,2,3}, m=1..3: ";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].max_multiplicity;
    os << "; exact search mu=2 over 5124 classes: " << s1.records.size() << " records, identical under 1 and 8 workers)";
    return {true, os.str()};
}

}  // namespace

int main() {
    const std::uint64_t seed = oracle::test_seed();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"extremal correctness sweep", extremal_sweep},
        {"desk census golden", desk_golden},
        {"Q growth bound", q_growth},
        {"bound chain", bound_chain},
        {"class-count identities", class_counts},
        {"threshold reproduction", thresholds},
        {"Stirling sandwich", stirling},
        {"property suites", [seed] { return properties(seed); }},
        {"desk-scale scope", desk_scale_statement},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS " : "FAIL ") << i + 1 << ' ' << criteria[i].first << ": " << o.detail << " ["
                  << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
