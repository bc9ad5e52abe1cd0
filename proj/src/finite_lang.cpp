#include "edcodes/finite_lang.hpp"

#include "edcodes/errors.hpp"

#include <algorithm>

namespace edcodes {

FiniteLang::FiniteLang(std::size_t alphabet_size, WordSet words) : alphabet_size_(alphabet_size)
{
    for (auto& w : words) check_word(w);
    words_ = std::move(words);
}

FiniteLang::FiniteLang(std::size_t alphabet_size, std::initializer_list<Word> words)
    : alphabet_size_(alphabet_size)
{
    for (const auto& w : words) insert(w);
}

FiniteLang FiniteLang::parse(const Alphabet& alphabet, std::initializer_list<std::string_view> words)
{
    FiniteLang out(alphabet.size());
    for (auto text : words) out.insert(alphabet.parse(text));
    return out;
}

FiniteLang FiniteLang::uniform(std::size_t alphabet_size, std::size_t length)
{
    FiniteLang out(alphabet_size);
    for (auto& w : all_words_of_length(alphabet_size, length)) out.words_.insert(std::move(w));
    return out;
}

std::size_t FiniteLang::max_length() const
{
    return words_.empty() ? 0 : words_.rbegin()->size();
}

std::size_t FiniteLang::min_length() const
{
    return words_.empty() ? 0 : words_.begin()->size();
}

bool FiniteLang::insert(Word w)
{
    check_word(w);
    return words_.insert(std::move(w)).second;
}

void FiniteLang::insert(const FiniteLang& other)
{
    if (other.alphabet_size_ != alphabet_size_) throw PreconditionError("alphabet mismatch");
    words_.insert(other.words_.begin(), other.words_.end());
}

bool FiniteLang::is_subset_of(const FiniteLang& other) const
{
    return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end(),
                         ShortlexLess{});
}

void FiniteLang::check_word(const Word& w) const
{
    for (Symbol s : w) {
        if (s >= alphabet_size_) throw PreconditionError("word uses a letter outside the alphabet");
    }
}

FiniteLang set_union(const FiniteLang& lhs, const FiniteLang& rhs)
{
    FiniteLang out = lhs;
    out.insert(rhs);
    return out;
}

std::string format_set(const Alphabet& alphabet, const FiniteLang& lang)
{
    std::string out = "{";
    bool first = true;
    for (const auto& w : lang) {
        if (!first) out += ", ";
        out += w.empty() ? std::string("ε") : alphabet.format(w);
        first = false;
    }
    return out + "}";
}

} // namespace edcodes
