#pragma once

#include "oracles.hpp"

#include "edcodes/closure.hpp"
#include "edcodes/errors.hpp"

#include <string_view>

namespace th {

inline const edcodes::Alphabet& ab()
{
    static const auto alphabet = edcodes::Alphabet::letters(2);
    return alphabet;
}

inline const edcodes::Alphabet& bin()
{
    static const auto alphabet = edcodes::Alphabet::binary();
    return alphabet;
}

inline edcodes::Word w(std::string_view text, const edcodes::Alphabet& alphabet = ab())
{
    if (text == "ε") return {};
    return alphabet.parse(text);
}

inline edcodes::FiniteLang lang(std::initializer_list<std::string_view> words, const edcodes::Alphabet& alphabet = ab())
{
    edcodes::FiniteLang out(alphabet.size());
    for (auto text : words) out.insert(w(text, alphabet));
    return out;
}

inline edcodes::FiniteLang from_words(const oracle::Words& words, std::size_t sigma)
{
    return edcodes::FiniteLang(sigma, edcodes::WordSet(words.begin(), words.end()));
}

inline oracle::Words to_words(const edcodes::FiniteLang& l)
{
    return oracle::Words(l.begin(), l.end());
}

inline oracle::Words to_words(const edcodes::WordSet& s)
{
    return oracle::Words(s.begin(), s.end());
}

inline edcodes::RegularLang re(std::string_view pattern, const edcodes::Alphabet& alphabet = ab())
{
    return edcodes::RegularLang::parse(pattern, alphabet);
}

} // namespace th
