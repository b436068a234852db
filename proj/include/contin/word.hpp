#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace contin {

using Letter = std::uint64_t;

/// Finite sequence of positive integer letters. Letters are validated at
/// construction; a default-constructed Word is the empty word.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    Word reversed() const;
    /// Letters [first, last) as a new word; empty when first >= last.
    Word slice(std::size_t first, std::size_t last) const;
    Word appended(Letter letter) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Representative of a reversal class: lexicographically <= its reversal.
class CanonicalWord {
public:
    const Word& word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    Letter operator[](std::size_t i) const { return word_[i]; }
    std::span<const Letter> letters() const noexcept { return word_.letters(); }

    friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
    friend auto operator<=>(const CanonicalWord&, const CanonicalWord&) = default;

private:
    friend CanonicalWord canonicalize(const Word& w);
    friend CanonicalWord canonical_unchecked(std::vector<Letter> letters);
    explicit CanonicalWord(Word w) : word_(std::move(w)) {}
    Word word_;
};

CanonicalWord canonicalize(const Word& w);

/// Wraps letters already known to be <= their reversal. Used by the
/// enumerators, which test canonicality before materializing a word.
CanonicalWord canonical_unchecked(std::vector<Letter> letters);

bool is_canonical(std::span<const Letter> letters);

/// Parameters of an alphabet {b_1 < ... < b_t < l+1 < ... < s}.
struct LacunaryShape {
    unsigned t = 0;
    unsigned l = 0;
    unsigned s = 0;
    std::vector<Letter> low;  // b_1..b_t

    friend bool operator==(const LacunaryShape&, const LacunaryShape&) = default;
};

/// Strictly increasing sequence of positive letters a_1 < ... < a_s.
class Alphabet {
public:
    explicit Alphabet(std::vector<Letter> letters);

    /// Expands {b_1..b_t} ∪ {l+1..s}; requires 1 <= t <= l < s and b_t <= l.
    static Alphabet lacunary(unsigned l, unsigned s, std::vector<Letter> low);
    /// {1 < 2 < ... < s}
    static Alphabet interval(unsigned s);

    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    const std::optional<LacunaryShape>& shape() const noexcept { return shape_; }

    /// Rank of a letter, or nullopt when it is not in the alphabet.
    std::optional<std::size_t> rank_of(Letter letter) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Letter> letters_;
    std::optional<LacunaryShape> shape_;
};

using Count = std::uint32_t;

/// Occurrence counts p_1..p_s, one per alphabet letter, all >= 1.
class ParikhVector {
public:
    explicit ParikhVector(std::vector<Count> counts);
    static ParikhVector equipartitioned(std::size_t letters, Count m);

    std::size_t size() const noexcept { return counts_.size(); }
    Count operator[](std::size_t i) const { return counts_[i]; }
    std::span<const Count> counts() const noexcept { return counts_; }
    /// n = p_1 + ... + p_s
    std::uint64_t length() const noexcept { return length_; }
    bool is_equipartitioned() const noexcept;

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend auto operator<=>(const ParikhVector& a, const ParikhVector& b) {
        return a.counts_ <=> b.counts_;
    }

private:
    std::vector<Count> counts_;
    std::uint64_t length_ = 0;
};

/// Throws ValidationError unless alphabet and Parikh vector have equal length.
void require_aligned(const Alphabet& alphabet, const ParikhVector& parikh);

/// The sorted word a_1^{p_1} ... a_s^{p_s}.
Word sorted_word(const Alphabet& alphabet, const ParikhVector& parikh);

/// Parikh vector of `w` over its own letter set, which becomes the alphabet.
std::pair<Alphabet, ParikhVector> abelian_class_of(const Word& w);

// Text format: comma-separated positive decimal integers, whitespace ignored,
// empty string is the empty list.

std::vector<std::uint64_t> parse_uint_list(std::string_view text, std::string_view what);
Word parse_word(std::string_view text);
Alphabet parse_alphabet(std::string_view text);
ParikhVector parse_parikh(std::string_view text);

std::string format_word(std::span<const Letter> letters);
inline std::string format_word(const Word& w) { return format_word(w.letters()); }
inline std::string format_word(const CanonicalWord& w) { return format_word(w.letters()); }
std::string format_list(std::span<const Count> counts);

}  // namespace contin
