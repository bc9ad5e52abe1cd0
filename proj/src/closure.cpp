#include "edcodes/closure.hpp"

#include "edcodes/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace edcodes {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

// Backtracking over unions of generator closures inside a finite universe
// of at most 64 words. Each closed subset is reached exactly once: words
// are decided in universe order, including a word pulls in its closure,
// and a closure may not touch a word already excluded.
class GeneratorSearch {
public:
    GeneratorSearch(std::size_t alphabet_size, std::vector<Word> universe, std::vector<std::optional<Mask>> closures,
                    const SearchLimits& limits)
        : alphabet_size_(alphabet_size), universe_(std::move(universe)), closures_(std::move(closures)),
          limits_(limits)
    {
    }

    Mask mask_of(const FiniteLang& lang) const
    {
        Mask m = 0;
        for (const auto& w : lang) {
            auto it = std::find(universe_.begin(), universe_.end(), w);
            if (it == universe_.end()) {
                throw VerificationFailure("word outside the search universe");
            }
            m |= bit(static_cast<std::size_t>(it - universe_.begin()));
        }
        return m;
    }

    FiniteLang lang_of(Mask m) const
    {
        FiniteLang out(alphabet_size_);
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            if (m & bit(i)) out.insert(universe_[i]);
        }
        return out;
    }

    EnumerationStats run(Mask required, const std::function<bool(const FiniteLang&)>& emit)
    {
        stats_ = {};
        stopped_ = false;
        if (required && !code(required)) return stats_;
        visit(0, required, 0, emit);
        return stats_;
    }

private:
    bool code(Mask m)
    {
        auto it = code_memo_.find(m);
        if (it != code_memo_.end()) return it->second;
        bool result = is_code(lang_of(m)).is_code;
        code_memo_.emplace(m, result);
        return result;
    }

    void visit(std::size_t i, Mask current, Mask excluded, const std::function<bool(const FiniteLang&)>& emit)
    {
        if (stopped_) return;
        if (++stats_.nodes > limits_.max_nodes) throw GuardExceeded("search node budget exhausted", limits_.max_nodes);
        if (i == universe_.size()) {
            if (current != 0) {
                ++stats_.emitted;
                if (!emit(lang_of(current))) stopped_ = true;
            }
            return;
        }
        if (current & bit(i)) {
            visit(i + 1, current, excluded, emit);
            return;
        }
        if (closures_[i] && (*closures_[i] & excluded) == 0) {
            Mask next = current | *closures_[i];
            if (code(next)) visit(i + 1, next, excluded, emit);
        }
        visit(i + 1, current, excluded | bit(i), emit);
    }

    std::size_t alphabet_size_;
    std::vector<Word> universe_;
    std::vector<std::optional<Mask>> closures_; // nullopt: closure leaves the universe
    SearchLimits limits_;
    EnumerationStats stats_;
    bool stopped_ = false;
    std::unordered_map<Mask, bool> code_memo_;
};

std::vector<Word> universe_of_lengths(std::size_t alphabet_size, const std::vector<std::size_t>& lengths,
                                      const SearchLimits& limits)
{
    std::size_t count = 0;
    for (auto n : lengths) {
        std::size_t layer = 1;
        for (std::size_t i = 0; i < n; ++i) {
            layer *= alphabet_size;
            if (layer > limits.max_words) break;
        }
        count += layer;
        if (count > limits.max_words || count > 64) {
            throw GuardExceeded("too many candidate words", std::min<std::size_t>(limits.max_words, 64));
        }
    }
    std::vector<Word> out;
    for (auto n : lengths) {
        auto layer = all_words_of_length(alphabet_size, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::optional<Mask> closure_mask(const std::vector<Word>& universe, const WordSet& closure)
{
    Mask m = 0;
    for (const auto& w : closure) {
        auto it = std::find(universe.begin(), universe.end(), w);
        if (it == universe.end()) return std::nullopt;
        m |= bit(static_cast<std::size_t>(it - universe.begin()));
    }
    return m;
}

GeneratorSearch delta_search(std::size_t alphabet_size, int k, const SearchLimits& limits)
{
    auto universe = universe_of_lengths(alphabet_size, delta_closed_length_bound(k), limits);
    const EditRelation rel(EditKind::Delete, k);
    std::vector<std::optional<Mask>> closures;
    for (const auto& g : universe) {
        FiniteLang seed(alphabet_size);
        seed.insert(g);
        closures.push_back(closure_mask(universe, closure_brute(rel, seed, g.size()).words.words()));
    }
    return GeneratorSearch(alphabet_size, std::move(universe), std::move(closures), limits);
}

void check_delta_closed_code(const FiniteLang& lang, int k)
{
    if (lang.contains_empty_word() || !is_code(lang)) throw PreconditionError("input is not a code");
    if (!is_closed(lang, EditRelation(EditKind::Delete, k))) {
        throw PreconditionError("input is not delta:" + std::to_string(k) + "-closed");
    }
}

bool uniform_measure_is_one(const FiniteLang& lang)
{
    return bernoulli_measure(lang, BernoulliDist::uniform(lang.alphabet_size())) == 1;
}

std::string alternation(const Alphabet& alphabet, const RegularLang& lang)
{
    if (lang.is_empty()) return "∅";
    if (!lang.is_finite()) return "X";
    // A finite canonical automaton accepts no word longer than its state count.
    auto words = lang.words_up_to(lang.state_count());
    std::string out = "(";
    bool first = true;
    for (const auto& w : words) {
        if (!first) out += "|";
        out += w.empty() ? std::string("ε") : alphabet.format(w);
        first = false;
    }
    return out + ")";
}

ClosedCodeClassification not_closed(std::string reason, std::optional<std::pair<Word, Word>> violation = {})
{
    ClosedCodeClassification c;
    c.shape = ClosedShape::NotClosedCode;
    c.reason = std::move(reason);
    c.violation = std::move(violation);
    return c;
}

bool same_length(const FiniteLang& lang)
{
    return lang.empty() || lang.min_length() == lang.max_length();
}

} // namespace

// ---------------------------------------------------------------------------

ErCompletion er_completion(const RegularLang& lang, const Alphabet& alphabet)
{
    if (alphabet.size() != lang.alphabet_size()) throw PreconditionError("alphabet mismatch");
    if (lang.contains_empty_word() || !is_code_regular(lang)) throw PreconditionError("not a code");
    if (is_complete(lang)) throw PreconditionError("already complete");

    const std::size_t k = lang.alphabet_size();
    ErCompletion out{Word{}, Word{}, RegularLang::empty(k), RegularLang::empty(k), {}};
    out.external = shortest_external_witness(lang);
    const Word doubled = power(out.external, 2);
    out.separator = concat(doubled, make_overlapping_free(doubled, k));

    const auto all = RegularLang::all_words(k);
    const auto sep = RegularLang::from_word(k, out.separator);
    const auto containing_sep = concat(concat(all, sep), all);
    out.filler = difference(all, union_of(star(lang), containing_sep));
    out.completed = union_of(lang, concat(sep, star(concat(out.filler, sep))));

    const std::string x = alternation(alphabet, lang);
    const std::string y = alphabet.format(out.separator);
    out.expression = x + " | " + y + "((.* ∖ (" + x + "* | .*" + y + ".*))" + y + ")*";

    if (!is_overlapping_free(out.separator) || factor_language(star(lang)).contains(out.separator)) {
        throw VerificationFailure("er_completion: separator word is not admissible");
    }
    if (!is_subset(lang, out.completed)) throw VerificationFailure("er_completion: result does not contain X");
    if (!is_code_regular(out.completed)) throw VerificationFailure("er_completion: result is not a code");
    if (!is_complete(out.completed)) throw VerificationFailure("er_completion: result is not complete");
    return out;
}

std::vector<std::size_t> delta_closed_length_bound(int k)
{
    if (k < 1) throw PreconditionError("k must be >= 1");
    std::vector<std::size_t> out;
    const long upper = static_cast<long>(k) * k - k - 1;
    for (long n = 1; n <= upper; ++n) {
        if (n != k) out.push_back(static_cast<std::size_t>(n));
    }
    return out;
}

EnumerationStats enumerate_delta_closed_codes(std::size_t alphabet_size, int k,
                                              const std::function<bool(const FiniteLang&)>& emit,
                                              const SearchLimits& limits, const FiniteLang* required)
{
    auto search = delta_search(alphabet_size, k, limits);
    const auto bound = delta_closed_length_bound(k);
    const EditRelation rel(EditKind::Delete, k);
    Mask required_mask = required ? search.mask_of(*required) : 0;
    return search.run(required_mask, [&](const FiniteLang& code) {
        if (!is_code(code) || !is_closed(code, rel)) {
            throw VerificationFailure("enumerated set is not a delta-closed code");
        }
        for (const auto& w : code) {
            if (!std::binary_search(bound.begin(), bound.end(), w.size())) {
                throw VerificationFailure("enumerated code violates the length bound");
            }
        }
        return emit(code);
    });
}

std::vector<FiniteLang> delta_closed_codes(std::size_t alphabet_size, int k, const SearchLimits& limits)
{
    std::vector<FiniteLang> out;
    enumerate_delta_closed_codes(alphabet_size, k, [&](const FiniteLang& c) {
        out.push_back(c);
        return true;
    }, limits);
    return out;
}

std::vector<FiniteLang> embed_delta_closed(const FiniteLang& lang, int k, const SearchLimits& limits)
{
    check_delta_closed_code(lang, k);
    const auto bound = delta_closed_length_bound(k);
    for (const auto& w : lang) {
        if (!std::binary_search(bound.begin(), bound.end(), w.size())) {
            throw VerificationFailure("delta-closed code with a word outside the length bound");
        }
    }
    std::vector<FiniteLang> out;
    enumerate_delta_closed_codes(lang.alphabet_size(), k, [&](const FiniteLang& c) {
        if (uniform_measure_is_one(c)) out.push_back(c);
        return true;
    }, limits, &lang);
    return out;
}

// ---------------------------------------------------------------------------

NoClosedCodeWitness assert_no_closed_code(const FiniteLang& lang, const EditRelation& rel, const Alphabet& alphabet)
{
    if (lang.empty()) throw PreconditionError("assert_no_closed_code: empty set");
    if (lang.contains_empty_word() || !is_code(lang)) throw PreconditionError("input is not a code");

    NoClosedCodeWitness out;
    out.source = *lang.begin();
    const auto k = static_cast<std::size_t>(rel.budget);
    const std::string x = alphabet.format(out.source);
    switch (rel.kind) {
    case EditKind::Insert:
    case EditKind::InsertUpTo: {
        // x = uv with u = x, v = ε: u(vu)^k v = x^(k+1), reached by |x|
        // insertions of k letters each.
        out.step = EditRelation(EditKind::Insert, rel.budget);
        const Word tail = power(out.source, k);
        out.chain.push_back(out.source);
        for (std::size_t j = 1; j <= out.source.size(); ++j) {
            Word next = out.source;
            next.insert(next.end(), tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(j * k));
            out.chain.push_back(std::move(next));
        }
        out.target = out.chain.back();
        out.explanation = "(" + x + ")^" + std::to_string(k + 1) + " is in the " + out.step.name() +
                          "-closure of " + x + "; a closed X would contain it, yet it is also a product of " +
                          std::to_string(k + 1) + " words of X";
        break;
    }
    case EditKind::DeleteUpTo: {
        out.step = EditRelation(EditKind::Delete, 1);
        out.chain.push_back(out.source);
        for (Word w = out.source; !w.empty();) {
            w.pop_back();
            out.chain.push_back(w);
        }
        out.target = Word{};
        out.explanation = "the empty word is in the delta:1-closure of " + x + ", and delta:1 ⊆ " + rel.name() +
                          "; a closed X would contain the empty word, which no code does";
        break;
    }
    default:
        throw PreconditionError("assert_no_closed_code supports iota, iota-upto and delta-upto, got " + rel.name());
    }
    for (std::size_t i = 1; i < out.chain.size(); ++i) {
        if (!relates(out.step, out.chain[i - 1], out.chain[i])) {
            throw VerificationFailure("assert_no_closed_code: broken chain");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ConditionD condition_d(const FiniteLang& lang, int k)
{
    return ConditionD{k % 2 == 0, lang.alphabet_size() == 2, lang.max_length() > static_cast<std::size_t>(k)};
}

std::string describe(const ClosedCodeClassification& c)
{
    switch (c.shape) {
    case ClosedShape::ShortWords: return "ShortWords";
    case ClosedShape::UniformFull: return "UniformFull(" + std::to_string(c.length) + ")";
    case ClosedShape::ParityHalf:
        return "ParityHalf(" + std::to_string(c.length) + "," + (c.parity == Parity::Even ? "even" : "odd") + ")";
    case ClosedShape::NotClosedCode: return "NotClosedCode(" + c.reason + ")";
    }
    return "?";
}

ClosedCodeClassification classify_sigma_closed(const FiniteLang& lang, int k)
{
    const EditRelation rel(EditKind::Substitute, k);
    if (lang.contains_empty_word() || !is_code(lang)) return not_closed("not a code");
    if (auto v = closure_violation(lang, rel)) return not_closed("not " + rel.name() + "-closed", v);

    ClosedCodeClassification c;
    c.condition = condition_d(lang, k);
    if (!c.condition.exceeds_k) {
        c.shape = ClosedShape::ShortWords;
        return c;
    }
    if (!same_length(lang)) {
        throw VerificationFailure("closed code mixes lengths beyond k");
    }
    c.length = lang.max_length();
    const auto alphabet_size = lang.alphabet_size();
    if (lang == FiniteLang::uniform(alphabet_size, c.length)) {
        c.shape = ClosedShape::UniformFull;
        return c;
    }
    if (!c.condition.holds()) throw VerificationFailure("closed code outside condition D is not a full cube");
    for (Parity p : {Parity::Even, Parity::Odd}) {
        if (lang.words() == expand(ParityClass{c.length, p}, alphabet_size)) {
            c.shape = ClosedShape::ParityHalf;
            c.parity = p;
            return c;
        }
    }
    throw VerificationFailure("closed code is neither a full cube nor a parity class");
}

std::vector<FiniteLang> sigma_closed_completion(const FiniteLang& lang, int k, const SearchLimits& limits)
{
    auto shape = classify_sigma_closed(lang, k);
    if (shape.shape == ClosedShape::NotClosedCode) throw PreconditionError("input is not a closed code: " + shape.reason);
    if (uniform_measure_is_one(lang)) throw PreconditionError("input is already complete");

    const auto alphabet_size = lang.alphabet_size();
    if (shape.shape != ClosedShape::ShortWords) {
        // Only A^n can complete a closed code with words longer than k.
        return {FiniteLang::uniform(alphabet_size, shape.length)};
    }

    std::vector<std::size_t> lengths;
    for (int n = 1; n <= k; ++n) lengths.push_back(static_cast<std::size_t>(n));
    auto universe = universe_of_lengths(alphabet_size, lengths, limits);
    std::vector<std::optional<Mask>> closures;
    for (const auto& g : universe) closures.push_back(closure_mask(universe, expand(sigma_star(g, k, alphabet_size), alphabet_size)));
    GeneratorSearch search(alphabet_size, universe, std::move(closures), limits);

    std::vector<FiniteLang> out;
    const EditRelation rel(EditKind::Substitute, k);
    search.run(search.mask_of(lang), [&](const FiniteLang& candidate) {
        if (uniform_measure_is_one(candidate)) {
            if (!is_closed(candidate, rel)) throw VerificationFailure("completion candidate is not closed");
            out.push_back(candidate);
        }
        return true;
    });
    return out;
}

ClosedCodeClassification classify_composite_closed(const FiniteLang& lang, const EditRelation& rel)
{
    if (rel.kind != EditKind::SubstituteUpTo && rel.kind != EditKind::Levenshtein) {
        throw PreconditionError("classify_composite_closed supports sigma-upto and lambda, got " + rel.name());
    }
    if (lang.contains_empty_word() || !is_code(lang)) return not_closed("not a code");
    if (auto v = closure_violation(lang, rel)) return not_closed("not " + rel.name() + "-closed", v);
    if (lang.empty()) return not_closed("empty set");

    ClosedCodeClassification c;
    c.condition = condition_d(lang, rel.budget);
    c.length = lang.max_length();
    if (!same_length(lang) || lang != FiniteLang::uniform(lang.alphabet_size(), c.length)) {
        throw VerificationFailure("closed code is not a full uniform code");
    }
    c.shape = ClosedShape::UniformFull;
    return c;
}

} // namespace edcodes
