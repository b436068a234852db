#pragma once

#include <cstdint>
#include <vector>

#include "contin/bignat.hpp"
#include "contin/census.hpp"
#include "contin/word.hpp"

namespace contin {

/// The K-maximizing arrangement of the class (A, p):
///   a_s L_{s-1} a_{s-2} L_{s-3} ... a_1^{p_1} ... a_{s-3} L_{s-2} a_{s-1} L_s,  L_i = a_i^{p_i - 1}.
/// The left half walks i = s..1 emitting a_i when s-i is even and L_i when odd;
/// the right half walks i = 1..s emitting L_i when s-i is even and a_i when odd.
Word build_w_max(const Alphabet& alphabet, const ParikhVector& parikh);

struct ExtremalResult {
    std::vector<CanonicalWord> argmax;  // lexicographic order
    std::vector<CanonicalWord> argmin;
    BigNat max_value;
    BigNat min_value;
};

/// Exhaustive maximum and minimum of K over the class, with every witness.
ExtremalResult brute_force_extrema(const Alphabet& alphabet, const ParikhVector& parikh,
                                   const CensusOptions& options = {});

/// True iff canonicalize(build_w_max) is the unique brute-force argmax.
bool verify_wmax(const Alphabet& alphabet, const ParikhVector& parikh, const CensusOptions& options = {});

}  // namespace contin
