#include "edcodes/words.hpp"

#include "edcodes/errors.hpp"

#include <algorithm>

namespace edcodes {

namespace {

void require_binary(std::size_t alphabet_size, const char* op)
{
    if (alphabet_size != 2) {
        throw PreconditionError(std::string(op) + " requires a binary alphabet");
    }
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols))
{
    if (symbols_.size() < 2) {
        throw PreconditionError("alphabet needs at least two symbols");
    }
    if (symbols_.size() > 256) {
        throw PreconditionError("alphabet has more than 256 symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (utf8_characters(symbols_[i]).size() != 1) {
            throw PreconditionError("alphabet symbol '" + symbols_[i] +
                                    "' is not a single character");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (symbols_[i] == symbols_[j]) {
                throw PreconditionError("duplicate alphabet symbol '" + symbols_[i] + "'");
            }
        }
    }
}

Alphabet Alphabet::letters(std::size_t count)
{
    if (count > 26) throw PreconditionError("Alphabet::letters supports at most 26 letters");
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < count; ++i) symbols.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(symbols));
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

std::optional<Symbol> Alphabet::index_of(std::string_view symbol) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == symbol) return static_cast<Symbol>(i);
    }
    return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const
{
    Word word;
    for (const auto& ch : utf8_characters(text)) {
        auto index = index_of(ch);
        if (!index) throw PreconditionError("symbol '" + ch + "' is not in the alphabet");
        word.push_back(*index);
    }
    return word;
}

std::string Alphabet::format(const Word& word) const
{
    std::string text;
    for (Symbol s : word) text += symbol(s);
    return text;
}

std::vector<std::string> utf8_characters(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 1;
        if (lead >= 0xF0) len = 4;
        else if (lead >= 0xE0) len = 3;
        else if (lead >= 0xC0) len = 2;
        len = std::min(len, text.size() - i);
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

WordSet subwords(const Word& w)
{
    WordSet out{Word{}};
    for (Symbol letter : w) {
        std::vector<Word> extended;
        extended.reserve(out.size());
        for (const auto& prefix : out) {
            Word next = prefix;
            next.push_back(letter);
            extended.push_back(std::move(next));
        }
        out.insert(extended.begin(), extended.end());
    }
    return out;
}

bool is_subword(const Word& x, const Word& w)
{
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < x.size(); ++j) {
        if (w[j] == x[i]) ++i;
    }
    return i == x.size();
}

bool is_factor(const Word& x, const Word& w)
{
    return std::search(w.begin(), w.end(), x.begin(), x.end()) != w.end();
}

std::size_t longest_border(const Word& w)
{
    if (w.empty()) return 0;
    // KMP failure function
    std::vector<std::size_t> fail(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k - 1];
        if (w[i] == w[k]) ++k;
        fail[i] = k;
    }
    return fail.back();
}

bool is_overlapping_free(const Word& w)
{
    if (w.empty()) throw PreconditionError("is_overlapping_free: empty word");
    return longest_border(w) == 0;
}

Word make_overlapping_free(const Word& v, std::size_t alphabet_size)
{
    if (v.empty()) throw PreconditionError("make_overlapping_free: empty word");
    if (is_overlapping_free(v)) return {};
    std::size_t cap = v.size() + 2;
    std::size_t length = 1;
    for (;;) {
        for (; length <= cap; ++length) {
            Word u(length, 0);
            do {
                if (is_overlapping_free(concat(v, u))) return u;
            } while (next_word(u, alphabet_size));
        }
        cap += 2;
    }
}

Word complement_word(const Word& w, std::size_t alphabet_size)
{
    require_binary(alphabet_size, "complement_word");
    Word out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [](Symbol s) { return static_cast<Symbol>(s ^ 1U); });
    return out;
}

Word xor_words(const Word& lhs, const Word& rhs, std::size_t alphabet_size)
{
    require_binary(alphabet_size, "xor_words");
    if (lhs.size() != rhs.size()) throw PreconditionError("xor_words: length mismatch");
    Word out(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = static_cast<Symbol>(lhs[i] ^ rhs[i]);
    return out;
}

std::size_t letter_count(const Word& w, Symbol letter)
{
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), letter));
}

std::size_t hamming_distance(const Word& lhs, const Word& rhs)
{
    if (lhs.size() != rhs.size()) throw PreconditionError("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) d += lhs[i] != rhs[i];
    return d;
}

Word concat(const Word& lhs, const Word& rhs)
{
    Word out;
    out.reserve(lhs.size() + rhs.size());
    out.insert(out.end(), lhs.begin(), lhs.end());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

Word power(const Word& w, std::size_t exponent)
{
    Word out;
    out.reserve(w.size() * exponent);
    for (std::size_t i = 0; i < exponent; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

bool next_word(Word& w, std::size_t alphabet_size)
{
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] + 1U < alphabet_size) {
            ++w[i];
            return true;
        }
        w[i] = 0;
    }
    return false;
}

std::vector<Word> all_words_of_length(std::size_t alphabet_size, std::size_t length)
{
    std::vector<Word> out;
    Word w(length, 0);
    do {
        out.push_back(w);
    } while (next_word(w, alphabet_size));
    return out;
}

std::vector<Word> all_words_between(std::size_t alphabet_size, std::size_t min_length,
                                    std::size_t max_length)
{
    std::vector<Word> out;
    for (std::size_t n = min_length; n <= max_length; ++n) {
        auto layer = all_words_of_length(alphabet_size, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace edcodes
