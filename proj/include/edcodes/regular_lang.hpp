#pragma once

#include "edcodes/finite_lang.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edcodes {

// A regular language held as its minimal complete deterministic automaton.
//
// Every value is canonical: states are unreachable-free, minimized, and
// numbered in breadth-first discovery order from the initial state (state 0)
// following letter order. Two values denote the same language iff they
// compare equal.
class RegularLang {
public:
    using State = std::uint32_t;

    // Builds the canonical automaton of an arbitrary complete DFA given as a
    // row-major table: transitions[q * alphabet_size + a].
    RegularLang(std::size_t alphabet_size, const std::vector<State>& transitions,
                const std::vector<bool>& accepting, State initial);

    static RegularLang empty(std::size_t alphabet_size);
    static RegularLang epsilon(std::size_t alphabet_size);
    // A*
    static RegularLang all_words(std::size_t alphabet_size);
    // A^n
    static RegularLang words_of_length(std::size_t alphabet_size, std::size_t length);
    static RegularLang from_word(std::size_t alphabet_size, const Word& w);
    static RegularLang from_finite(const FiniteLang& lang);

    // Parses a small regular-expression syntax over `alphabet`: letters,
    // '|', '*', '+', '?', parentheses, '.' (any letter) and 'ε' (the empty
    // word). Whitespace is ignored.
    static RegularLang parse(std::string_view pattern, const Alphabet& alphabet);

    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t state_count() const noexcept { return accepting_.size(); }
    State initial() const noexcept { return 0; }
    State next(State q, Symbol a) const { return table_[q * alphabet_size_ + a]; }
    bool accepting(State q) const { return accepting_[q]; }
    State run(State from, const Word& w) const;

    bool contains(const Word& w) const { return accepting_[run(initial(), w)]; }
    bool is_empty() const;
    bool contains_empty_word() const { return accepting_[0]; }
    bool is_finite() const;
    // States from which some accepting state is reachable.
    std::vector<bool> live_states() const;

    // Shortlex-least accepted word, if any.
    std::optional<Word> shortest_word() const;
    // Accepted words of length <= max_length, shortlex order.
    WordSet words_up_to(std::size_t max_length) const;

    // Already minimal; returns a copy. Kept for symmetry with the algebra.
    RegularLang minimized() const { return *this; }

    std::string to_dot(const Alphabet& alphabet, std::string_view name = "L") const;

    bool operator==(const RegularLang&) const = default;

private:
    RegularLang() = default;

    std::size_t alphabet_size_ = 0;
    std::vector<State> table_;
    std::vector<bool> accepting_;
};

RegularLang union_of(const RegularLang& lhs, const RegularLang& rhs);
RegularLang intersection(const RegularLang& lhs, const RegularLang& rhs);
RegularLang difference(const RegularLang& lhs, const RegularLang& rhs);
RegularLang complement(const RegularLang& lang);
RegularLang concat(const RegularLang& lhs, const RegularLang& rhs);
// Submonoid generated by the language; always contains the empty word.
RegularLang star(const RegularLang& lang);
RegularLang plus(const RegularLang& lang);

bool is_subset(const RegularLang& lhs, const RegularLang& rhs);

// F(L): every factor of some word of L.
RegularLang factor_language(const RegularLang& lang);

// True iff every word is a factor of some word of X*.
bool is_complete(const RegularLang& lang);
bool is_complete(const FiniteLang& lang);

// Shortlex-least word outside F(X*). Throws PreconditionError("language
// complete") when X is complete.
Word shortest_external_witness(const RegularLang& lang);

} // namespace edcodes
