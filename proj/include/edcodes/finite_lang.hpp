#pragma once

#include "edcodes/words.hpp"

#include <initializer_list>

namespace edcodes {

// An explicit finite set of words over an alphabet of `alphabet_size`
// letters, kept in shortlex order.
class FiniteLang {
public:
    explicit FiniteLang(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}
    FiniteLang(std::size_t alphabet_size, WordSet words);
    FiniteLang(std::size_t alphabet_size, std::initializer_list<Word> words);

    // Parses each entry with `alphabet`.
    static FiniteLang parse(const Alphabet& alphabet, std::initializer_list<std::string_view> words);
    // A^n
    static FiniteLang uniform(std::size_t alphabet_size, std::size_t length);

    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    const WordSet& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool contains(const Word& w) const { return words_.count(w) != 0; }
    bool contains_empty_word() const { return contains(Word{}); }
    std::size_t max_length() const;
    std::size_t min_length() const;

    // Returns false when w was already present.
    bool insert(Word w);
    void insert(const FiniteLang& other);
    bool erase(const Word& w) { return words_.erase(w) != 0; }

    bool is_subset_of(const FiniteLang& other) const;

    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool operator==(const FiniteLang&) const = default;

private:
    void check_word(const Word& w) const;

    std::size_t alphabet_size_;
    WordSet words_;
};

FiniteLang set_union(const FiniteLang& lhs, const FiniteLang& rhs);

std::string format_set(const Alphabet& alphabet, const FiniteLang& lang);

} // namespace edcodes
