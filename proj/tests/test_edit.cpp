#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace edcodes;
using th::lang;
using th::w;

namespace {

constexpr EditKind kAllKinds[] = {EditKind::Delete,         EditKind::Insert,      EditKind::Substitute,
                                  EditKind::DeleteUpTo,     EditKind::InsertUpTo,  EditKind::SubstituteUpTo,
                                  EditKind::Levenshtein,    EditKind::LevenshteinStrict};

oracle::Words oracle_image(EditKind kind, int k, const Word& x, std::size_t sigma)
{
    oracle::Words out;
    auto add = [&](const oracle::Words& s) { out.insert(s.begin(), s.end()); };
    const auto uk = static_cast<std::size_t>(k);
    switch (kind) {
    case EditKind::Delete: return oracle::delete_exactly(x, uk);
    case EditKind::Insert: return oracle::insert_exactly(x, uk, sigma);
    case EditKind::Substitute: return oracle::substitute_exactly(x, uk, sigma);
    case EditKind::DeleteUpTo:
        for (std::size_t i = 1; i <= uk; ++i) add(oracle::delete_exactly(x, i));
        return out;
    case EditKind::InsertUpTo:
        for (std::size_t i = 1; i <= uk; ++i) add(oracle::insert_exactly(x, i, sigma));
        return out;
    case EditKind::SubstituteUpTo:
        for (std::size_t i = 1; i <= uk; ++i) add(oracle::substitute_exactly(x, i, sigma));
        return out;
    case EditKind::Levenshtein: return oracle::lambda_composition(x, k, sigma);
    case EditKind::LevenshteinStrict:
        out = oracle::lambda_composition(x, k, sigma);
        out.erase(x);
        return out;
    }
    return out;
}

oracle::Words orbit_oracle(const Word& x, int k, std::size_t sigma)
{
    return oracle::fixed_point(
        {x}, [&](const Word& v) { return oracle::substitute_exactly(v, static_cast<std::size_t>(k), sigma); }, x.size());
}

} // namespace

TEST_CASE("relation names")
{
    CHECK(EditRelation::parse("delta:1") == EditRelation(EditKind::Delete, 1));
    CHECK(EditRelation::parse("insert:2") == EditRelation(EditKind::Insert, 2));
    CHECK(EditRelation::parse("sigma-upto:3") == EditRelation(EditKind::SubstituteUpTo, 3));
    CHECK(EditRelation::parse("lambda-strict:2") == EditRelation(EditKind::LevenshteinStrict, 2));
    CHECK(EditRelation::parse("levenshtein:2").name() == "lambda:2");
    for (auto bad : {"delta", "delta:0", "delta:-1", "delta:x", "zeta:1", "delta:1x"}) {
        CHECK_THROWS_AS(EditRelation::parse(bad), PreconditionError);
    }
    CHECK_THROWS_AS(EditRelation(EditKind::Delete, 0), PreconditionError);
    CHECK(EditRelation::parse("delta:2").inverse() == EditRelation::parse("iota:2"));
    CHECK(EditRelation::parse("iota-upto:2").inverse() == EditRelation::parse("delta-upto:2"));
    CHECK(EditRelation::parse("sigma:2").inverse() == EditRelation::parse("sigma:2"));
    CHECK(EditRelation::parse("sigma-upto:2").length_preserving());
    CHECK_FALSE(EditRelation::parse("lambda:2").length_preserving());
    CHECK(EditRelation::parse("lambda:2").reflexive_possible());
    CHECK_FALSE(EditRelation::parse("lambda:1").reflexive_possible());
}

TEST_CASE("image examples")
{
    const auto d1 = EditRelation::parse("delta:1");
    CHECK(apply_set(d1, lang({"abb", "baa"})) == FiniteLang::uniform(2, 2));
    CHECK((apply(d1, w("a"), 2) == WordSet{Word{}}));
    const auto& b = th::bin();
    CHECK((apply(EditRelation::parse("sigma:2"), th::w("00", b), 2) == WordSet{th::w("11", b)}));
    CHECK((apply(EditRelation::parse("sigma:2"), th::w("11", b), 2) == WordSet{th::w("00", b)}));
    CHECK(apply_set(EditRelation::parse("iota:1"), FiniteLang(2)).empty());
    CHECK(apply_set(d1, lang({"aab"})) == lang({"ab", "aa"}));
    CHECK(apply(EditRelation::parse("delta:3"), w("ab"), 2).empty());
    CHECK(apply(EditRelation::parse("sigma:3"), w("ab"), 2).empty());
    CHECK_FALSE(apply(EditRelation::parse("iota:1"), Word{}, 2).empty());
    CHECK(apply(EditRelation::parse("sigma:2"), w("abc", Alphabet::letters(3)), 3).size() == 3 * 4);
}

TEST_CASE("apply agrees with the oracles")
{
    for (std::size_t sigma : {2U, 3U}) {
        const std::size_t max_len = sigma == 2 ? 5 : 3;
        for (const auto& x : oracle::all_words_upto(sigma, max_len)) {
            for (auto kind : kAllKinds) {
                for (int k = 1; k <= 3; ++k) {
                    const bool heavy = kind == EditKind::Levenshtein || kind == EditKind::LevenshteinStrict ||
                                       kind == EditKind::Insert || kind == EditKind::InsertUpTo;
                    if (heavy && x.size() + static_cast<std::size_t>(k) > (sigma == 2 ? 7U : 5U)) continue;
                    const EditRelation rel(kind, k);
                    const auto expected = oracle_image(kind, k, x, sigma);
                    const auto got = apply(rel, x, sigma);
                    if (th::to_words(got) != expected) {
                        FAIL_CHECK(rel.name() << " on word of length " << x.size() << " sigma " << sigma);
                    }
                    for (const auto& y : expected) {
                        if (!relates(rel, x, y)) FAIL_CHECK("relates misses a pair for " << rel.name());
                    }
                }
            }
        }
    }
}

TEST_CASE("relates rejects non-images")
{
    const auto targets = oracle::all_words_upto(2, 5);
    for (const auto& x : oracle::all_words_upto(2, 4)) {
        for (auto kind : kAllKinds) {
            for (int k = 1; k <= 2; ++k) {
                const auto image = oracle_image(kind, k, x, 2);
                for (const auto& y : targets) CHECK(relates(EditRelation(kind, k), x, y) == (image.count(y) == 1));
            }
        }
    }
}

TEST_CASE("deletion and insertion are converse")
{
    for (int k = 1; k <= 3; ++k) {
        const EditRelation del(EditKind::Delete, k), ins(EditKind::Insert, k);
        for (const auto& x : oracle::all_words_upto(2, 8)) {
            for (const auto& y : apply(del, x, 2)) CHECK(apply(ins, y, 2).count(x) == 1);
        }
        for (const auto& y : oracle::all_words_upto(2, 5)) {
            for (const auto& x : apply(ins, y, 2)) CHECK(apply(del, x, 2).count(y) == 1);
        }
    }
}

TEST_CASE("substitution: symmetry and the xor characterization")
{
    const auto& b = th::bin();
    (void)b;
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto words = all_words_of_length(2, n);
        for (int k = 1; k <= 3 && static_cast<std::size_t>(k) <= n; ++k) {
            const EditRelation rel(EditKind::Substitute, k);
            std::size_t mismatches = 0;
            for (const auto& x : words) {
                const auto image = apply(rel, x, 2);
                for (const auto& y : words) {
                    const bool in = image.count(y) == 1;
                    if (in != (letter_count(xor_words(x, y, 2), 1) == static_cast<std::size_t>(k))) ++mismatches;
                }
                if (n <= 6) {
                    for (const auto& y : image) CHECK(apply(rel, y, 2).count(x) == 1);
                }
            }
            CHECK(mismatches == 0);
        }
    }
}

TEST_CASE("levenshtein and lambda_membership")
{
    CHECK(levenshtein(w("abab"), w("abab")) == 0);
    CHECK(levenshtein(w("aab"), w("ab")) == 1);
    CHECK(levenshtein(w("ab"), w("ba")) == 2);
    CHECK(levenshtein(Word{}, w("bbb")) == 3);
    CHECK_FALSE(lambda_membership(w("ab"), w("ab"), 1));
    CHECK(lambda_membership(w("ab"), w("ab"), 2));
    CHECK(lambda_membership(w("ab"), w("ba"), 2));
    CHECK_THROWS_AS(lambda_membership(w("ab"), w("ab"), 0), PreconditionError);

    for (const auto& x : oracle::all_words_upto(2, 5)) {
        for (int p = 1; p <= 3; ++p) {
            const auto ball = oracle::lambda_composition(x, p, 2);
            for (const auto& y : oracle::all_words_upto(2, 5)) {
                CHECK(lambda_membership(x, y, p) == (ball.count(y) == 1));
            }
        }
        for (const auto& y : oracle::all_words_upto(2, 5)) CHECK(levenshtein(x, y) == oracle::edit_distance(x, y));
    }
}

TEST_CASE("orbit examples")
{
    const auto& b = th::bin();
    const auto pair = sigma_star(th::w("01", b), 2, 2);
    CHECK(std::holds_alternative<SelfPair>(pair));
    CHECK((expand(pair, 2) == WordSet{th::w("01", b), th::w("10", b)}));

    const auto parity = sigma_star(th::w("0101", b), 2, 2);
    CHECK(describe(parity, b) == "ParityClass(4,even)");
    CHECK(orbit_cardinality(parity, 2) == 8);

    const auto abc = Alphabet::letters(3);
    const auto cube = sigma_star(abc.parse("abc"), 2, 3);
    CHECK(describe(cube, abc) == "FullCube(3)");
    CHECK(orbit_cardinality(cube, 3) == 27);

    const auto shorter = sigma_star(th::w("01", b), 3, 2);
    CHECK(describe(shorter, b) == "Explicit({01})");
    CHECK(describe(sigma_star(th::w("011", b), 1, 2), b) == "FullCube(3)");
    CHECK(describe(sigma_star(th::w("0111", b), 2, 2), b) == "ParityClass(4,odd)");

    CHECK_THROWS_AS(expand(FullCube{21}, 2), GuardExceeded);
    CHECK(orbit_cardinality(FullCube{100}, 2) == boost::multiprecision::cpp_int(1) << 100);
}

TEST_CASE("orbit descriptors expand to the brute-force fixed point")
{
    for (std::size_t sigma : {2U, 3U}) {
        const std::size_t max_len = sigma == 2 ? 6 : 4;
        for (const auto& x : oracle::all_words_upto(sigma, max_len, 1)) {
            for (int k = 1; k <= 4; ++k) {
                const auto orbit = sigma_star(x, k, sigma);
                const auto expected = orbit_oracle(x, k, sigma);
                const auto listed = expand(orbit, sigma);
                if (th::to_words(listed) != expected) FAIL_CHECK("orbit mismatch, length " << x.size() << " k " << k);
                CHECK(orbit_cardinality(orbit, sigma) == expected.size());
            }
        }
    }
}

TEST_CASE("binary orbits under two substitutions have 2^(n-1) words")
{
    for (std::size_t n = 3; n <= 10; ++n) {
        for (const auto& x : all_words_of_length(2, n)) {
            CHECK(orbit_cardinality(sigma_star(x, 2, 2), 2) == (std::size_t{1} << (n - 1)));
        }
    }
}

TEST_CASE("one substitution is reachable in two k-substitutions (|A| >= 3)")
{
    for (int k = 1; k <= 3; ++k) {
        const EditRelation s1(EditKind::Substitute, 1), sk(EditKind::Substitute, k);
        for (std::size_t n = static_cast<std::size_t>(k); n <= 5; ++n) {
            for (const auto& x : all_words_of_length(3, n)) {
                const auto two = apply_set(sk, FiniteLang(3, apply(sk, x, 3)));
                for (const auto& y : apply(s1, x, 3)) CHECK(two.contains(y));
            }
        }
    }
}

TEST_CASE("two substitutions are reachable in two k-substitutions (binary, |w| > k)")
{
    for (int k = 1; k <= 4; ++k) {
        const EditRelation s2(EditKind::Substitute, 2), sk(EditKind::Substitute, k);
        for (std::size_t n = static_cast<std::size_t>(k) + 1; n <= 8; ++n) {
            for (const auto& x : all_words_of_length(2, n)) {
                const auto two = apply_set(sk, FiniteLang(2, apply(sk, x, 2)));
                for (const auto& y : apply(s2, x, 2)) CHECK(two.contains(y));
            }
        }
    }
}

TEST_CASE("closure_brute")
{
    const auto& b = th::bin();
    const auto parity = closure_brute(EditRelation::parse("sigma:2"), lang({"0101"}, b), 4);
    CHECK_FALSE(parity.truncated);
    CHECK(parity.words.size() == 8);
    for (const auto& v : parity.words) CHECK(letter_count(v, 1) % 2 == 0);

    for (std::size_t n = 1; n <= 6; ++n) {
        const Word x(n, 0);
        CHECK(closure_brute(EditRelation::parse("sigma:1"), FiniteLang(2, {x}), n).words == FiniteLang::uniform(2, n));
    }

    const auto d3 = closure_brute(EditRelation::parse("delta:3"), lang({"aaaab"}), 5);
    const auto expected = oracle::fixed_point(
        {w("aaaab")}, [](const Word& v) { return oracle::delete_exactly(v, 3); }, 5);
    CHECK(th::to_words(d3.words) == expected);
    CHECK(d3.words == lang({"aaaab", "aa", "ab"}));

    const auto grown = closure_brute(EditRelation::parse("iota:1"), lang({"a"}), 3);
    CHECK(grown.truncated);
    CHECK(grown.words.size() == 1 + 3 + 7);
    CHECK_THROWS_AS(closure_brute(EditRelation::parse("iota:1"), lang({"aaa"}), 2), PreconditionError);
}
