#pragma once

#include "edcodes/regular_lang.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace edcodes {

using Rational = boost::multiprecision::cpp_rational;

// Two distinct factorizations of the same word over a candidate code.
struct Ambiguity {
    Word word;
    std::vector<Word> left;
    std::vector<Word> right;
};

struct CodeReport {
    bool is_code = true;
    std::optional<Ambiguity> counterexample;

    explicit operator bool() const noexcept { return is_code; }
};

// Unique decipherability of a finite set (Sardinas-Patterson). On failure
// the counterexample is an ambiguous word of minimal length. Rejects sets
// containing the empty word.
CodeReport is_code(const FiniteLang& lang);

// Sardinas-Patterson over residuals of a regular language.
bool is_code_regular(const RegularLang& lang);

// True iff both sequences are over `lang`, concatenate to `word` and differ.
bool validates(const Ambiguity& ambiguity, const FiniteLang& lang);

// Positive letter weights summing to one.
class BernoulliDist {
public:
    explicit BernoulliDist(std::vector<Rational> weights);
    static BernoulliDist uniform(std::size_t alphabet_size);

    std::size_t alphabet_size() const noexcept { return weights_.size(); }
    const Rational& weight(Symbol a) const { return weights_.at(a); }
    Rational weight(const Word& w) const;

private:
    std::vector<Rational> weights_;
};

Rational bernoulli_measure(const FiniteLang& lang, const BernoulliDist& dist);

// Regular codes only: maximal iff complete.
bool is_maximal_code(const RegularLang& lang);

// Parses "p/q", integers and plain decimals ("0.25") exactly.
Rational parse_rational(std::string_view text);

} // namespace edcodes
