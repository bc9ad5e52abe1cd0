#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace edcodes;
using th::lang;
using th::re;
using th::w;

namespace {

Rational uniform(const FiniteLang& x)
{
    return bernoulli_measure(x, BernoulliDist::uniform(x.alphabet_size()));
}

// Codes with words from pool, |X| <= max_size, grown only from codes.
void for_each_code(const std::vector<Word>& pool, std::size_t max_size, const std::function<void(const FiniteLang&)>& visit)
{
    FiniteLang current(2);
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!current.empty()) visit(current);
        if (current.size() == max_size) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            current.insert(pool[i]);
            if (is_code(current).is_code) rec(i + 1);
            current.erase(pool[i]);
        }
    };
    rec(0);
}

} // namespace

TEST_CASE("code examples")
{
    const auto ambiguous = is_code(lang({"a", "ab", "ba"}));
    REQUIRE_FALSE(ambiguous.is_code);
    REQUIRE(ambiguous.counterexample);
    CHECK(ambiguous.counterexample->word == w("aba"));
    CHECK(validates(*ambiguous.counterexample, lang({"a", "ab", "ba"})));

    CHECK(is_code(lang({"aa", "ab", "bb", "aaaab", "abbbb"})).is_code);
    CHECK(is_code(lang({"abb", "baa"})).is_code);
    CHECK_THROWS_AS(is_code(lang({"ε", "a"})), PreconditionError);
    CHECK(is_code(FiniteLang(2)).is_code);
}

TEST_CASE("validates rejects bad factorizations")
{
    const auto x = lang({"a", "ab", "ba"});
    CHECK_FALSE(validates(Ambiguity{w("aba"), {w("ab"), w("a")}, {w("ab"), w("a")}}, x));
    CHECK_FALSE(validates(Ambiguity{w("aba"), {w("ab"), w("a")}, {w("a"), w("b"), w("a")}}, x));
    CHECK_FALSE(validates(Ambiguity{w("abab"), {w("ab"), w("a")}, {w("a"), w("ba")}}, x));
}

TEST_CASE("Sardinas-Patterson agrees with factorization counting")
{
    std::mt19937 rng(21);
    constexpr std::size_t bound = 14;
    for (int round = 0; round < 400; ++round) {
        const auto x = oracle::random_lang(rng, round % 3 == 0 ? 3 : 2, 4, 5);
        const auto fx = th::from_words(x, round % 3 == 0 ? 3 : 2);
        const auto report = is_code(fx);
        const auto brute = oracle::brute_ambiguity(x, bound);
        if (brute) {
            REQUIRE_FALSE(report.is_code);
            CHECK(report.counterexample->word.size() == brute->size());
        }
        if (!report.is_code) {
            REQUIRE(report.counterexample);
            CHECK(validates(*report.counterexample, fx));
            if (report.counterexample->word.size() <= bound) CHECK(brute);
        }
        CHECK(is_code_regular(RegularLang::from_finite(fx)) == report.is_code);
    }
}

TEST_CASE("regular code examples")
{
    CHECK(is_code_regular(re("a*b")));
    CHECK_FALSE(is_code_regular(re("..|...")));
    CHECK(is_code_regular(re("(aa)+(b|aba|abb)")));
    CHECK_THROWS_AS(is_code_regular(re("a*")), PreconditionError);
    CHECK(is_code_regular(re("ab*")));
    CHECK_FALSE(is_code_regular(re("a|ab|ba")));
    CHECK(is_code_regular(re("b*a|b+")) == false);
}

TEST_CASE("measure examples")
{
    CHECK(uniform(lang({"aa", "ab", "bb", "aaaab", "abbbb"})) == Rational(13, 16));
    CHECK(uniform(FiniteLang::uniform(2, 2)) == 1);
    CHECK(uniform(lang({"abb", "baa"})) == Rational(1, 4));
    const BernoulliDist skew({Rational(1, 3), Rational(2, 3)});
    CHECK(bernoulli_measure(lang({"ab", "b"}), skew) == Rational(2, 9) + Rational(2, 3));
    CHECK_THROWS_AS(BernoulliDist({Rational(1, 2), Rational(1, 3)}), PreconditionError);
    CHECK_THROWS_AS(BernoulliDist({Rational(0), Rational(1)}), PreconditionError);
}

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("1") == 1);
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
}

TEST_CASE("measure against the integer oracle, and additivity")
{
    std::mt19937 rng(22);
    for (int round = 0; round < 200; ++round) {
        const auto x = oracle::random_lang(rng, 2, 6, 6);
        const auto [num, den] = oracle::uniform_measure(x, 2);
        CHECK(uniform(th::from_words(x, 2)) == Rational(num, den));

        oracle::Words left, right;
        for (const auto& v : x) (rng() % 2 ? left : right).insert(v);
        CHECK(uniform(th::from_words(left, 2)) + uniform(th::from_words(right, 2)) == uniform(th::from_words(x, 2)));
    }
}

TEST_CASE("finite codes: measure 1 iff complete, never above 1")
{
    const auto pool = all_words_between(2, 1, 4);
    std::size_t codes = 0, complete = 0;
    for_each_code(pool, 6, [&](const FiniteLang& x) {
        ++codes;
        const auto m = uniform(x);
        CHECK(m <= 1);
        const bool c = is_complete(x);
        CHECK(c == (m == 1));
        // automaton route on a sample
        if (codes % 97 == 0 || c) CHECK(c == is_complete(RegularLang::from_finite(x)));
        complete += c;
    });
    MESSAGE("codes checked: " << codes << ", complete: " << complete);
    CHECK(complete > 0);
}

TEST_CASE("maximal codes")
{
    CHECK(is_maximal_code(RegularLang::words_of_length(2, 3)));
    CHECK_FALSE(is_maximal_code(RegularLang::from_finite(lang({"abb", "baa"}))));
    CHECK(is_maximal_code(re("a*b")));
    CHECK_THROWS_AS(is_maximal_code(re("a|aa")), PreconditionError);
}
