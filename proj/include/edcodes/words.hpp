#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace edcodes {

// Letters are stored as indices into an Alphabet. On a binary alphabet
// index 0 plays the role of the letter 0 and index 1 the letter 1.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

// Length-then-lexicographic order on words.
struct ShortlexLess {
    bool operator()(const Word& lhs, const Word& rhs) const noexcept
    {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        return lhs < rhs;
    }
};

using WordSet = std::set<Word, ShortlexLess>;

// An ordered set of at least two distinct printable symbols. Each symbol is
// one UTF-8 encoded character.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    // {a, b, c, ...} with the given number of letters.
    static Alphabet letters(std::size_t count);
    // {0, 1}
    static Alphabet binary();

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbol(Symbol index) const { return symbols_.at(index); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::optional<Symbol> index_of(std::string_view symbol) const;

    // Throws PreconditionError on characters outside the alphabet.
    Word parse(std::string_view text) const;
    std::string format(const Word& word) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

// Splits a UTF-8 string into its code points (each as a byte string).
std::vector<std::string> utf8_characters(std::string_view text);

// Returns the set of all subsequences of w, including the empty word and w.
WordSet subwords(const Word& w);

bool is_subword(const Word& x, const Word& w);
bool is_factor(const Word& x, const Word& w);

// Length of the longest proper border of w (0 for the empty word).
std::size_t longest_border(const Word& w);

// True iff w has no border of length in [1, |w|-1]. Rejects the empty word.
bool is_overlapping_free(const Word& w);

// Shortest-then-least u such that v.u is overlapping-free.
Word make_overlapping_free(const Word& v, std::size_t alphabet_size);

// Binary alphabet only.
Word complement_word(const Word& w, std::size_t alphabet_size);
Word xor_words(const Word& lhs, const Word& rhs, std::size_t alphabet_size);

// Number of occurrences of `letter` in w.
std::size_t letter_count(const Word& w, Symbol letter);
std::size_t hamming_distance(const Word& lhs, const Word& rhs);

Word concat(const Word& lhs, const Word& rhs);
Word power(const Word& w, std::size_t exponent);

// All words of exactly `length` letters, in lexicographic order.
std::vector<Word> all_words_of_length(std::size_t alphabet_size, std::size_t length);
// All words with length in [min_length, max_length], shortlex order.
std::vector<Word> all_words_between(std::size_t alphabet_size, std::size_t min_length,
                                    std::size_t max_length);

// Advances w to its lexicographic successor among words of the same length.
// Returns false (leaving w all zeros) after the last word.
bool next_word(Word& w, std::size_t alphabet_size);

} // namespace edcodes
