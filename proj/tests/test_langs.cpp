#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace edcodes;
using th::lang;
using th::re;
using th::w;

namespace {

constexpr std::size_t kProbe = 7;

oracle::Words upto(const RegularLang& l, std::size_t n = kProbe)
{
    return th::to_words(l.words_up_to(n));
}

oracle::Words filter(const std::function<bool(const Word&)>& keep, std::size_t n = kProbe)
{
    oracle::Words out;
    for (const auto& v : oracle::all_words_upto(2, n)) {
        if (keep(v)) out.insert(v);
    }
    return out;
}

// Membership in L1 L2 and L* for finite L, by splitting.
bool in_concat(const Word& v, const oracle::Words& l1, const oracle::Words& l2)
{
    for (std::size_t i = 0; i <= v.size(); ++i) {
        if (l1.count(Word(v.begin(), v.begin() + static_cast<long>(i))) &&
            l2.count(Word(v.begin() + static_cast<long>(i), v.end())))
            return true;
    }
    return false;
}

bool in_star(const Word& v, const oracle::Words& l)
{
    std::vector<bool> ok(v.size() + 1, false);
    ok[0] = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!ok[i]) continue;
        for (const auto& x : l) {
            if (!x.empty() && i + x.size() <= v.size() &&
                std::equal(x.begin(), x.end(), v.begin() + static_cast<long>(i)))
                ok[i + x.size()] = true;
        }
    }
    return ok[v.size()];
}

} // namespace

TEST_CASE("finite languages")
{
    auto x = lang({"ab", "a", "ba"});
    CHECK(x.size() == 3);
    CHECK(*x.begin() == w("a"));
    CHECK(x.max_length() == 2);
    CHECK(x.min_length() == 1);
    CHECK_FALSE(x.insert(w("ab")));
    CHECK(x.insert(w("bb")));
    CHECK(lang({"a"}).is_subset_of(x));
    CHECK(FiniteLang::uniform(2, 3).size() == 8);
    CHECK(format_set(th::ab(), lang({"ε", "ab"})) == "{ε, ab}");
    CHECK_THROWS_AS(FiniteLang(2, {Word{2}}), PreconditionError);
}

TEST_CASE("from_finite")
{
    CHECK(RegularLang::from_finite(FiniteLang(2)) == RegularLang::empty(2));
    CHECK(RegularLang::from_finite(lang({"a", "b"})) == RegularLang::words_of_length(2, 1));
    CHECK(RegularLang::from_finite(lang({"ε"})) == RegularLang::epsilon(2));
}

TEST_CASE("pattern syntax")
{
    CHECK(re("(a|b)*") == RegularLang::all_words(2));
    CHECK(re(".*") == RegularLang::all_words(2));
    CHECK(re("..") == RegularLang::words_of_length(2, 2));
    CHECK(re("ε") == RegularLang::epsilon(2));
    CHECK(re("a b") == re("ab"));
    CHECK(upto(re("a*b")) == filter([](const Word& v) {
              return !v.empty() && v.back() == 1 && std::count(v.begin(), v.end(), 1) == 1;
          }));
    CHECK(upto(re("(aa)+(b|aba|abb)")) == filter([](const Word& v) {
              for (std::size_t i = 2; i < v.size(); i += 2) {
                  if (!std::all_of(v.begin(), v.begin() + static_cast<long>(i), [](Symbol c) { return c == 0; })) break;
                  const Word tail(v.begin() + static_cast<long>(i), v.end());
                  if (tail == Word{1} || tail == Word{0, 1, 0} || tail == Word{0, 1, 1}) return true;
              }
              return false;
          }));
    CHECK(re("a?b+") == re("(ε|a)bb*"));
    CHECK_THROWS_AS(re("(ab"), PreconditionError);
    CHECK_THROWS_AS(re("ac"), PreconditionError);
    CHECK_THROWS_AS(re("*a"), PreconditionError);
}

TEST_CASE("canonical form")
{
    const auto l = re("(ab|ba)*a");
    CHECK(l.minimized() == l);
    CHECK(l.minimized().minimized() == l.minimized());
    CHECK(re("a(ba)*") == re("(ab)*a"));
    CHECK(RegularLang::all_words(2).state_count() == 1);
    CHECK(l.initial() == 0);
    CHECK(re("a*b").is_finite() == false);
    CHECK(RegularLang::words_of_length(2, 3).is_finite());
    CHECK(l.to_dot(th::ab()).find("digraph") != std::string::npos);
    CHECK(*re("(bb|ab)a").shortest_word() == w("aba"));
    CHECK_FALSE(RegularLang::empty(2).shortest_word());
}

TEST_CASE("regular algebra agrees with set operations on random finite languages")
{
    std::mt19937 rng(11);
    for (int round = 0; round < 60; ++round) {
        const auto a = oracle::random_lang(rng, 2, 3, 4);
        const auto b = oracle::random_lang(rng, 2, 3, 4);
        const auto ra = RegularLang::from_finite(th::from_words(a, 2));
        const auto rb = RegularLang::from_finite(th::from_words(b, 2));

        CHECK(upto(union_of(ra, rb)) == filter([&](const Word& v) { return a.count(v) || b.count(v); }));
        CHECK(upto(intersection(ra, rb)) == filter([&](const Word& v) { return a.count(v) && b.count(v); }));
        CHECK(upto(difference(ra, rb)) == filter([&](const Word& v) { return a.count(v) && !b.count(v); }));
        CHECK(upto(complement(ra)) == filter([&](const Word& v) { return !a.count(v); }));
        CHECK(upto(concat(ra, rb)) == filter([&](const Word& v) { return in_concat(v, a, b); }));
        CHECK(upto(star(ra)) == filter([&](const Word& v) { return in_star(v, a); }));
        CHECK(upto(plus(ra)) == filter([&](const Word& v) { return in_concat(v, a, upto(star(ra))); }));
        CHECK(is_subset(intersection(ra, rb), ra));
        CHECK(complement(complement(ra)) == ra);
    }
}

TEST_CASE("factor language")
{
    std::mt19937 rng(12);
    for (int round = 0; round < 60; ++round) {
        const auto a = oracle::random_lang(rng, 2, 4, 4);
        const auto b = oracle::random_lang(rng, 2, 4, 2);
        const auto ra = RegularLang::from_finite(th::from_words(a, 2));
        const auto rab = union_of(ra, RegularLang::from_finite(th::from_words(b, 2)));
        const auto f = factor_language(ra);
        CHECK(upto(f) == filter([&](const Word& v) {
                  return std::any_of(a.begin(), a.end(), [&](const Word& x) { return oracle::factor(v, x); });
              }));
        CHECK(is_subset(ra, f));
        CHECK(factor_language(f) == f);
        CHECK(is_subset(f, factor_language(rab)));

        // F(X*) against the oracle's factor test
        const auto fs = factor_language(star(ra));
        CHECK(upto(fs) == filter([&](const Word& v) { return oracle::factor_of_star(v, a); }));
    }
}

TEST_CASE("completeness examples")
{
    CHECK(is_complete(FiniteLang::uniform(2, 2)));
    CHECK_FALSE(is_complete(lang({"abb", "baa"})));
    CHECK(is_complete(union_of(RegularLang::words_of_length(2, 2), RegularLang::words_of_length(2, 3))));
    CHECK(is_complete(re("a*b")));
    CHECK_FALSE(is_complete(re("(aa)+(b|aba|abb)")));
    CHECK_THROWS_AS(shortest_external_witness(re("a*b")), PreconditionError);
    const auto z = RegularLang::from_finite(lang({"abb", "baa"}));
    CHECK(shortest_external_witness(z) == w("aaaa"));
}

TEST_CASE("completeness agrees with a bounded factor search")
{
    // The oracle only certifies incompleteness; completeness claims are
    // checked as absence of a short external word.
    std::mt19937 rng(13);
    for (int round = 0; round < 300; ++round) {
        const auto x = oracle::random_lang(rng, 2, 4, 6);
        const auto fx = th::from_words(x, 2);
        std::size_t maxlen = 0;
        for (const auto& v : x) maxlen = std::max(maxlen, v.size());
        const auto external = oracle::bounded_external_word(x, 2, 2 * maxlen + 2);
        const bool complete = is_complete(fx);
        CHECK(complete == is_complete(RegularLang::from_finite(fx)));
        if (external) {
            CHECK_FALSE(complete);
            CHECK(shortest_external_witness(RegularLang::from_finite(fx)) == *external);
        } else if (!complete) {
            const auto v = shortest_external_witness(RegularLang::from_finite(fx));
            CHECK_FALSE(oracle::factor_of_star(v, x));
        }
    }
}
