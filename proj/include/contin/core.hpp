#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "contin/bignat.hpp"
#include "contin/word.hpp"

namespace contin {

/// Regular continuant K(w) via the three-term recursion
///   K() = 1, K(w_1) = w_1, K(w_1..w_j) = w_j K(w_1..w_{j-1}) + K(w_1..w_{j-2}).
BigNat continuant(const Word& w);
BigNat continuant(std::span<const Letter> letters);

/// Determinant of the tridiagonal matrix with diagonal w_1..w_n, superdiagonal
/// -1 and subdiagonal 1, by fraction-free (Bareiss) elimination on the dense
/// matrix. Independent of the recursion; throws ValidationError on the empty word.
BigNat continuant_matrix(const Word& w);

struct SplitSides {
    BigNat lhs;  // K(w)
    BigNat rhs;  // K(w_1..w_j) K(w_{j+1}..w_n) + K(w_1..w_{j-1}) K(w_{j+2}..w_n)
};

/// Both sides of the splitting identity at cut 1 <= j <= n-1.
SplitSides split_identity(const Word& w, std::size_t j);

/// K(w) < 2 K(w_1..w_j) K(w_{j+1}..w_n) for 1 <= j <= n-1.
bool doubling_bound_check(const Word& w, std::size_t j);

/// Q_{r,0} = 1, Q_{r,1} = r, Q_{r,j+1} = r Q_{r,j} + Q_{r,j-1}.
BigNat generalized_fibonacci(std::uint64_t r, std::uint64_t j);

/// Upper bound prod(w_i + 1) >= K(w); used to pick a machine-word fast path.
BigNat continuant_upper_bound(const Alphabet& alphabet, const ParikhVector& parikh);

}  // namespace contin
