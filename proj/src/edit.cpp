#include "edcodes/edit.hpp"

#include "edcodes/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>

namespace edcodes {

namespace {

struct KindName {
    EditKind kind;
    std::string_view primary;
    std::string_view alias;
};

constexpr std::array<KindName, 8> kKindNames{{
    {EditKind::Delete, "delta", "delete"},
    {EditKind::Insert, "iota", "insert"},
    {EditKind::Substitute, "sigma", "substitute"},
    {EditKind::DeleteUpTo, "delta-upto", "delete-upto"},
    {EditKind::InsertUpTo, "iota-upto", "insert-upto"},
    {EditKind::SubstituteUpTo, "sigma-upto", "substitute-upto"},
    {EditKind::Levenshtein, "lambda", "levenshtein"},
    {EditKind::LevenshteinStrict, "lambda-strict", "levenshtein-strict"},
}};

void delete_exactly(const Word& w, std::size_t k, WordSet& out)
{
    if (k > w.size()) return;
    const std::size_t keep = w.size() - k;
    std::vector<std::size_t> idx(keep);
    for (std::size_t i = 0; i < keep; ++i) idx[i] = i;
    for (;;) {
        Word y(keep);
        for (std::size_t i = 0; i < keep; ++i) y[i] = w[idx[i]];
        out.insert(std::move(y));
        // next combination of `keep` indices out of |w|
        std::size_t i = keep;
        while (i > 0 && idx[i - 1] == w.size() - keep + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < keep; ++j) idx[j] = idx[j - 1] + 1;
    }
}

WordSet insert_once(const WordSet& from, std::size_t alphabet_size)
{
    WordSet out;
    for (const auto& w : from) {
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            for (Symbol a = 0; a < alphabet_size; ++a) {
                Word y = w;
                y.insert(y.begin() + static_cast<std::ptrdiff_t>(pos), a);
                out.insert(std::move(y));
            }
        }
    }
    return out;
}

void insert_exactly(const Word& w, std::size_t k, std::size_t alphabet_size, WordSet& out)
{
    WordSet layer{w};
    for (std::size_t i = 0; i < k; ++i) layer = insert_once(layer, alphabet_size);
    out.insert(layer.begin(), layer.end());
}

void substitute_exactly(const Word& w, std::size_t k, std::size_t alphabet_size, WordSet& out)
{
    if (k > w.size() || k == 0) return;
    const std::size_t n = w.size();
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    for (;;) {
        // Each chosen position takes one of the |A|-1 other letters.
        std::vector<Symbol> shift(k, 1);
        for (;;) {
            Word y = w;
            for (std::size_t i = 0; i < k; ++i) {
                y[pos[i]] = static_cast<Symbol>((w[pos[i]] + shift[i]) % alphabet_size);
            }
            out.insert(std::move(y));
            std::size_t i = k;
            while (i > 0 && shift[i - 1] + 1U == alphabet_size) shift[--i] = 1;
            if (i == 0) break;
            ++shift[i - 1];
        }
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
}

WordSet single_edits(const Word& w, std::size_t alphabet_size)
{
    WordSet out;
    delete_exactly(w, 1, out);
    insert_exactly(w, 1, alphabet_size, out);
    substitute_exactly(w, 1, alphabet_size, out);
    return out;
}

// All y with levenshtein(w, y) <= k, by breadth-first single edits.
WordSet edit_ball(const Word& w, std::size_t k, std::size_t alphabet_size)
{
    WordSet ball{w};
    WordSet frontier{w};
    for (std::size_t step = 0; step < k; ++step) {
        WordSet next;
        for (const auto& x : frontier) {
            for (auto& y : single_edits(x, alphabet_size)) {
                if (!ball.count(y)) next.insert(std::move(y));
            }
        }
        ball.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    return ball;
}

std::size_t ones(const Word& w) { return letter_count(w, 1); }

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace

EditRelation::EditRelation(EditKind k, int b) : kind(k), budget(b)
{
    if (b < 1) throw PreconditionError("edit relation budget must be >= 1");
}

EditRelation EditRelation::parse(std::string_view text)
{
    auto colon = text.rfind(':');
    if (colon == std::string_view::npos) {
        throw PreconditionError("relation must look like KIND:K, got '" + std::string(text) + "'");
    }
    auto kind_text = text.substr(0, colon);
    auto budget_text = text.substr(colon + 1);
    int budget = 0;
    auto [ptr, ec] = std::from_chars(budget_text.data(), budget_text.data() + budget_text.size(), budget);
    if (ec != std::errc() || ptr != budget_text.data() + budget_text.size() || budget < 1) {
        throw PreconditionError("relation budget must be a positive integer, got '" +
                                std::string(budget_text) + "'");
    }
    for (const auto& entry : kKindNames) {
        if (kind_text == entry.primary || kind_text == entry.alias) return EditRelation(entry.kind, budget);
    }
    throw PreconditionError("unknown relation kind '" + std::string(kind_text) + "'");
}

std::string EditRelation::name() const
{
    for (const auto& entry : kKindNames) {
        if (entry.kind == kind) return std::string(entry.primary) + ":" + std::to_string(budget);
    }
    return "?";
}

EditRelation EditRelation::inverse() const
{
    switch (kind) {
    case EditKind::Delete: return {EditKind::Insert, budget};
    case EditKind::Insert: return {EditKind::Delete, budget};
    case EditKind::DeleteUpTo: return {EditKind::InsertUpTo, budget};
    case EditKind::InsertUpTo: return {EditKind::DeleteUpTo, budget};
    default: return *this;
    }
}

bool EditRelation::length_preserving() const
{
    return kind == EditKind::Substitute || kind == EditKind::SubstituteUpTo;
}

bool EditRelation::reflexive_possible() const
{
    return kind == EditKind::Levenshtein && budget >= 2;
}

WordSet apply(const EditRelation& rel, const Word& w, std::size_t alphabet_size)
{
    const auto k = static_cast<std::size_t>(rel.budget);
    WordSet out;
    switch (rel.kind) {
    case EditKind::Delete: delete_exactly(w, k, out); break;
    case EditKind::Insert: insert_exactly(w, k, alphabet_size, out); break;
    case EditKind::Substitute:
        substitute_exactly(w, k, alphabet_size, out);
        if (k <= w.size() && out.size() != binomial(w.size(), k) * ipow(alphabet_size - 1, k)) {
            throw VerificationFailure("sigma image cardinality mismatch");
        }
        break;
    case EditKind::DeleteUpTo:
        for (std::size_t i = 1; i <= k; ++i) delete_exactly(w, i, out);
        break;
    case EditKind::InsertUpTo: {
        WordSet layer{w};
        for (std::size_t i = 1; i <= k; ++i) {
            layer = insert_once(layer, alphabet_size);
            out.insert(layer.begin(), layer.end());
        }
        break;
    }
    case EditKind::SubstituteUpTo:
        for (std::size_t i = 1; i <= k; ++i) substitute_exactly(w, i, alphabet_size, out);
        break;
    case EditKind::Levenshtein:
        out = edit_ball(w, k, alphabet_size);
        // The identity is a composite edit only from two steps on.
        if (k == 1) out.erase(w);
        break;
    case EditKind::LevenshteinStrict:
        out = edit_ball(w, k, alphabet_size);
        out.erase(w);
        break;
    }
    return out;
}

FiniteLang apply_set(const EditRelation& rel, const FiniteLang& lang)
{
    FiniteLang out(lang.alphabet_size());
    for (const auto& w : lang) {
        for (auto& y : apply(rel, w, lang.alphabet_size())) out.insert(std::move(y));
    }
    return out;
}

bool relates(const EditRelation& rel, const Word& x, const Word& y)
{
    const auto k = static_cast<std::size_t>(rel.budget);
    switch (rel.kind) {
    case EditKind::Delete: return y.size() + k == x.size() && is_subword(y, x);
    case EditKind::Insert: return x.size() + k == y.size() && is_subword(x, y);
    case EditKind::Substitute: return x.size() == y.size() && hamming_distance(x, y) == k;
    case EditKind::DeleteUpTo:
        return y.size() < x.size() && x.size() - y.size() <= k && is_subword(y, x);
    case EditKind::InsertUpTo:
        return x.size() < y.size() && y.size() - x.size() <= k && is_subword(x, y);
    case EditKind::SubstituteUpTo: {
        if (x.size() != y.size()) return false;
        auto d = hamming_distance(x, y);
        return d >= 1 && d <= k;
    }
    case EditKind::Levenshtein: return lambda_membership(x, y, rel.budget);
    case EditKind::LevenshteinStrict: return x != y && levenshtein(x, y) <= k;
    }
    return false;
}

std::size_t levenshtein(const Word& x, const Word& y)
{
    const Word& outer = x.size() >= y.size() ? x : y;
    const Word& inner = x.size() >= y.size() ? y : x;
    std::vector<std::size_t> row(inner.size() + 1);
    for (std::size_t i = 0; i <= inner.size(); ++i) row[i] = i;
    for (std::size_t j = 1; j <= outer.size(); ++j) {
        std::size_t diagonal = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= inner.size(); ++i) {
            std::size_t saved = row[i];
            if (inner[i - 1] == outer[j - 1]) {
                row[i] = diagonal;
            } else {
                row[i] = 1 + std::min({row[i - 1], row[i], diagonal});
            }
            diagonal = saved;
        }
    }
    return row[inner.size()];
}

bool lambda_membership(const Word& x, const Word& y, int p)
{
    if (p < 1) throw PreconditionError("lambda_membership: p must be >= 1");
    const auto d = levenshtein(x, y);
    if (p == 1) return d == 1;
    return d <= static_cast<std::size_t>(p);
}

OrbitDescriptor sigma_star(const Word& w, int k, std::size_t alphabet_size)
{
    if (k < 1) throw PreconditionError("sigma_star: k must be >= 1");
    const auto budget = static_cast<std::size_t>(k);
    const std::size_t n = w.size();
    if (n < budget) return ExplicitOrbit{WordSet{w}};
    if (alphabet_size >= 3) return FullCube{n};
    if (n == budget) return SelfPair{w};
    if (budget % 2 == 1) return FullCube{n};
    return ParityClass{n, ones(w) % 2 == 0 ? Parity::Even : Parity::Odd};
}

boost::multiprecision::cpp_int orbit_cardinality(const OrbitDescriptor& orbit, std::size_t alphabet_size)
{
    using boost::multiprecision::cpp_int;
    return std::visit(
        [&](const auto& shape) -> cpp_int {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, FullCube>) {
                return boost::multiprecision::pow(cpp_int(alphabet_size), static_cast<unsigned>(shape.length));
            } else if constexpr (std::is_same_v<T, ParityClass>) {
                return shape.length == 0 ? cpp_int(shape.parity == Parity::Even ? 1 : 0)
                                         : boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(shape.length - 1));
            } else if constexpr (std::is_same_v<T, SelfPair>) {
                return shape.word.empty() ? 1 : 2;
            } else {
                return cpp_int(shape.words.size());
            }
        },
        orbit);
}

WordSet expand(const OrbitDescriptor& orbit, std::size_t alphabet_size, std::size_t max_words)
{
    if (orbit_cardinality(orbit, alphabet_size) > max_words) {
        throw GuardExceeded("orbit expansion too large", max_words);
    }
    return std::visit(
        [&](const auto& shape) -> WordSet {
            using T = std::decay_t<decltype(shape)>;
            WordSet out;
            if constexpr (std::is_same_v<T, FullCube>) {
                for (auto& w : all_words_of_length(alphabet_size, shape.length)) out.insert(std::move(w));
            } else if constexpr (std::is_same_v<T, ParityClass>) {
                const std::size_t want = shape.parity == Parity::Even ? 0 : 1;
                for (auto& w : all_words_of_length(alphabet_size, shape.length)) {
                    if (ones(w) % 2 == want) out.insert(std::move(w));
                }
            } else if constexpr (std::is_same_v<T, SelfPair>) {
                out.insert(shape.word);
                out.insert(complement_word(shape.word, alphabet_size));
            } else {
                out = shape.words;
            }
            return out;
        },
        orbit);
}

std::string describe(const OrbitDescriptor& orbit, const Alphabet& alphabet)
{
    return std::visit(
        [&](const auto& shape) -> std::string {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, FullCube>) {
                return "FullCube(" + std::to_string(shape.length) + ")";
            } else if constexpr (std::is_same_v<T, ParityClass>) {
                return "ParityClass(" + std::to_string(shape.length) + "," +
                       (shape.parity == Parity::Even ? "even" : "odd") + ")";
            } else if constexpr (std::is_same_v<T, SelfPair>) {
                return "SelfPair(" + alphabet.format(shape.word) + ")";
            } else {
                return "Explicit(" + format_set(alphabet, FiniteLang(alphabet.size(), shape.words)) + ")";
            }
        },
        orbit);
}

ClosureResult closure_brute(const EditRelation& rel, const FiniteLang& lang, std::size_t length_cap)
{
    if (lang.max_length() > length_cap) {
        throw PreconditionError("closure_brute: length cap below the longest input word");
    }
    ClosureResult result{lang, false};
    std::deque<Word> work(lang.begin(), lang.end());
    while (!work.empty()) {
        Word w = std::move(work.front());
        work.pop_front();
        for (auto& y : apply(rel, w, lang.alphabet_size())) {
            if (y.size() > length_cap) {
                result.truncated = true;
                continue;
            }
            if (result.words.insert(y)) work.push_back(std::move(y));
        }
    }
    return result;
}

} // namespace edcodes
