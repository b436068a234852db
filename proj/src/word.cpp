#include "contin/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

#include "contin/errors.hpp"

namespace contin {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == 0) {
            throw ValidationError("letter at position " + std::to_string(i + 1) + " is 0; letters must be >= 1");
        }
    }
}

Word Word::reversed() const {
    Word out;
    out.letters_.assign(letters_.rbegin(), letters_.rend());
    return out;
}

Word Word::slice(std::size_t first, std::size_t last) const {
    Word out;
    last = std::min(last, letters_.size());
    if (first < last) out.letters_.assign(letters_.begin() + first, letters_.begin() + last);
    return out;
}

Word Word::appended(Letter letter) const {
    auto letters = letters_;
    letters.push_back(letter);
    return Word(std::move(letters));
}

bool is_canonical(std::span<const Letter> letters) {
    const std::size_t n = letters.size();
    for (std::size_t i = 0, j = n; i + 1 < j; ++i) {
        --j;
        if (letters[i] != letters[j]) return letters[i] < letters[j];
    }
    return true;
}

CanonicalWord canonicalize(const Word& w) {
    if (is_canonical(w.letters())) return CanonicalWord(w);
    return CanonicalWord(w.reversed());
}

CanonicalWord canonical_unchecked(std::vector<Letter> letters) {
    return CanonicalWord(Word(std::move(letters)));
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ValidationError("alphabet must contain at least one letter");
    if (letters_.front() == 0) throw ValidationError("alphabet letters must be >= 1");
    for (std::size_t i = 1; i < letters_.size(); ++i) {
        if (letters_[i] <= letters_[i - 1]) {
            throw ValidationError("alphabet must be strictly increasing (" + std::to_string(letters_[i - 1]) +
                                  " then " + std::to_string(letters_[i]) + ")");
        }
    }
}

Alphabet Alphabet::lacunary(unsigned l, unsigned s, std::vector<Letter> low) {
    const auto t = static_cast<unsigned>(low.size());
    if (t < 1 || t > l || l >= s) {
        throw ValidationError("lacunary alphabet requires 1 <= t <= l < s (t=" + std::to_string(t) +
                              ", l=" + std::to_string(l) + ", s=" + std::to_string(s) + ")");
    }
    if (low.back() > l) throw ValidationError("lacunary alphabet requires b_t <= l");
    LacunaryShape shape{t, l, s, low};
    std::vector<Letter> letters = std::move(low);
    for (Letter x = l + 1; x <= s; ++x) letters.push_back(x);
    Alphabet out(std::move(letters));
    out.shape_ = std::move(shape);
    return out;
}

Alphabet Alphabet::interval(unsigned s) {
    std::vector<Letter> letters(s);
    for (unsigned i = 0; i < s; ++i) letters[i] = i + 1;
    Alphabet out(std::move(letters));
    if (s >= 2) out.shape_ = LacunaryShape{1, 1, s, {1}};
    return out;
}

std::optional<std::size_t> Alphabet::rank_of(Letter letter) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), letter);
    if (it == letters_.end() || *it != letter) return std::nullopt;
    return static_cast<std::size_t>(it - letters_.begin());
}

ParikhVector::ParikhVector(std::vector<Count> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw ValidationError("Parikh vector must have at least one entry");
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) {
            throw ValidationError("Parikh entry p_" + std::to_string(i + 1) +
                                  " is 0; drop the letter from the alphabet instead");
        }
        length_ += counts_[i];
    }
}

ParikhVector ParikhVector::equipartitioned(std::size_t letters, Count m) {
    return ParikhVector(std::vector<Count>(letters, m));
}

bool ParikhVector::is_equipartitioned() const noexcept {
    return std::adjacent_find(counts_.begin(), counts_.end(), std::not_equal_to<>()) == counts_.end();
}

void require_aligned(const Alphabet& alphabet, const ParikhVector& parikh) {
    if (alphabet.size() != parikh.size()) {
        throw ValidationError("alphabet has " + std::to_string(alphabet.size()) + " letters but Parikh vector has " +
                              std::to_string(parikh.size()) + " entries");
    }
}

Word sorted_word(const Alphabet& alphabet, const ParikhVector& parikh) {
    require_aligned(alphabet, parikh);
    std::vector<Letter> letters;
    letters.reserve(parikh.length());
    for (std::size_t i = 0; i < alphabet.size(); ++i) letters.insert(letters.end(), parikh[i], alphabet[i]);
    return Word(std::move(letters));
}

std::pair<Alphabet, ParikhVector> abelian_class_of(const Word& w) {
    if (w.empty()) throw ValidationError("the empty word has no alphabet");
    std::map<Letter, Count> counts;
    for (Letter x : w.letters()) ++counts[x];
    std::vector<Letter> letters;
    std::vector<Count> parikh;
    for (auto [letter, c] : counts) {
        letters.push_back(letter);
        parikh.push_back(c);
    }
    return {Alphabet(std::move(letters)), ParikhVector(std::move(parikh))};
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text, std::string_view what) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact.push_back(c);
    }
    std::vector<std::uint64_t> out;
    if (compact.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = compact.find(',', pos);
        const std::string_view token =
            std::string_view(compact).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::uint64_t value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last) {
            throw ValidationError("invalid " + std::string(what) + " token '" + std::string(token) + "'");
        }
        if (value == 0) {
            throw ValidationError("invalid " + std::string(what) + " token '" + std::string(token) +
                                  "': must be a positive integer");
        }
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Word parse_word(std::string_view text) { return Word(parse_uint_list(text, "letter")); }

Alphabet parse_alphabet(std::string_view text) { return Alphabet(parse_uint_list(text, "alphabet letter")); }

ParikhVector parse_parikh(std::string_view text) {
    const auto raw = parse_uint_list(text, "Parikh count");
    std::vector<Count> counts;
    counts.reserve(raw.size());
    for (auto v : raw) {
        if (v > std::numeric_limits<Count>::max()) {
            throw ValidationError("invalid Parikh count token '" + std::to_string(v) + "': too large");
        }
        counts.push_back(static_cast<Count>(v));
    }
    return ParikhVector(std::move(counts));
}

std::string format_word(std::span<const Letter> letters) {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(letters[i]);
    }
    return out;
}

std::string format_list(std::span<const Count> counts) {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(counts[i]);
    }
    return out;
}

}  // namespace contin
