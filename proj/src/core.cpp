#include "contin/core.hpp"

#include <vector>

#include "contin/errors.hpp"

namespace contin {

BigNat continuant(std::span<const Letter> letters) {
    // K_{-1} = 0 and K_0 = 1 make the first step yield K(w_1) = w_1.
    BigNat prev = 0;
    BigNat cur = 1;
    BigNat next;
    for (Letter x : letters) {
        // next = x * cur + prev
        mpz_mul_ui(next.get_mpz_t(), cur.get_mpz_t(), x);
        next += prev;
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return cur;
}

BigNat continuant(const Word& w) { return continuant(w.letters()); }

BigNat continuant_matrix(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) throw ValidationError("continuant_matrix: the determinant needs at least one letter");
    std::vector<BigNat> m(n * n);
    auto at = [&](std::size_t i, std::size_t j) -> BigNat& { return m[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        at(i, i) = static_cast<unsigned long>(w[i]);
        if (i + 1 < n) {
            at(i, i + 1) = -1;
            at(i + 1, i) = 1;
        }
    }
    // Bareiss: after step k every entry below/right of the pivot is a minor
    // of the original matrix, so each division is exact.
    BigNat prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigNat v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                at(i, j) = std::move(v);
            }
        }
        prev_pivot = at(k, k);
    }
    BigNat det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    if (det < 0) throw Error("continuant_matrix: negative determinant for a positive word");
    return det;
}

namespace {

void require_cut(const Word& w, std::size_t j, const char* op) {
    if (w.size() < 2 || j < 1 || j > w.size() - 1) {
        throw ValidationError(std::string(op) + ": cut index " + std::to_string(j) + " outside 1.." +
                              (w.size() < 2 ? std::string("(none)") : std::to_string(w.size() - 1)));
    }
}

}  // namespace

SplitSides split_identity(const Word& w, std::size_t j) {
    require_cut(w, j, "split_identity");
    const auto letters = w.letters();
    const std::size_t n = w.size();
    // 1-based w_{a..b} maps to letters.subspan(a-1, b-a+1); empty ranges give 1.
    auto k = [&](std::size_t a, std::size_t b) -> BigNat {
        if (a > b) return 1;
        return continuant(letters.subspan(a - 1, b - a + 1));
    };
    SplitSides out;
    out.lhs = continuant(letters);
    out.rhs = k(1, j) * k(j + 1, n) + k(1, j - 1) * k(j + 2, n);
    return out;
}

bool doubling_bound_check(const Word& w, std::size_t j) {
    require_cut(w, j, "doubling_bound_check");
    const auto letters = w.letters();
    const BigNat left = continuant(letters.first(j));
    const BigNat right = continuant(letters.subspan(j));
    return continuant(letters) < 2 * left * right;
}

BigNat generalized_fibonacci(std::uint64_t r, std::uint64_t j) {
    if (r == 0) throw ValidationError("generalized_fibonacci: r must be >= 1");
    BigNat prev = 1;  // Q_{r,0}
    if (j == 0) return prev;
    BigNat cur = static_cast<unsigned long>(r);  // Q_{r,1}
    BigNat next;
    for (std::uint64_t i = 1; i < j; ++i) {
        mpz_mul_ui(next.get_mpz_t(), cur.get_mpz_t(), r);
        next += prev;
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return cur;
}

BigNat continuant_upper_bound(const Alphabet& alphabet, const ParikhVector& parikh) {
    require_aligned(alphabet, parikh);
    BigNat bound = 1;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        bound *= big_pow(BigNat(static_cast<unsigned long>(alphabet[i])) + 1, parikh[i]);
    }
    return bound;
}

}  // namespace contin
