#include "edcodes/indep.hpp"

#include "edcodes/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <tuple>

namespace edcodes {

namespace {

using State = RegularLang::State;

// One configuration of the pairing search: the x-copy of the automaton is
// in state p, the y-copy in state q. `pending` holds letters read by the
// leading side that the other side has not reached yet, used to decide
// x != y position by position.
struct Config {
    State p;
    State q;
    unsigned edits;
    bool x_leads;
    Word pending;
    bool differs;

    auto operator<=>(const Config&) const = default;
};

struct AlignmentRules {
    bool substitute = false;
    bool remove = false; // letter read on x only
    bool add = false;    // letter read on y only
    unsigned budget = 0;
    bool exact = false;  // edits must equal budget, else 1..budget
    bool need_distinct = false;
};

void read_x(Config& c, Symbol a)
{
    if (c.pending.empty() || c.x_leads) {
        c.pending.push_back(a);
        c.x_leads = true;
    } else {
        if (c.pending.front() != a) c.differs = true;
        c.pending.erase(c.pending.begin());
    }
}

void read_y(Config& c, Symbol a)
{
    if (c.pending.empty() || !c.x_leads) {
        c.pending.push_back(a);
        c.x_leads = false;
    } else {
        if (c.pending.front() != a) c.differs = true;
        c.pending.erase(c.pending.begin());
    }
}

// True iff some pair (x, y) of accepted words is aligned by the rules.
bool related_pair_exists(const RegularLang& dfa, const AlignmentRules& rules)
{
    const auto live = dfa.live_states();
    if (!live[0]) return false;
    const std::size_t k = dfa.alphabet_size();
    std::set<Config> seen;
    std::deque<Config> work;
    auto push = [&](Config c) {
        if (!live[c.p] || !live[c.q]) return;
        if (!rules.need_distinct) {
            c.pending.clear();
            c.differs = false;
        }
        if (seen.insert(c).second) work.push_back(std::move(c));
    };
    push(Config{0, 0, 0, true, {}, false});
    while (!work.empty()) {
        Config c = std::move(work.front());
        work.pop_front();
        bool count_ok = rules.exact ? c.edits == rules.budget : (c.edits >= 1 && c.edits <= rules.budget);
        if (rules.need_distinct) count_ok = c.edits <= rules.budget && (c.differs || !c.pending.empty());
        if (count_ok && dfa.accepting(c.p) && dfa.accepting(c.q)) return true;

        for (Symbol a = 0; a < k; ++a) {
            Config m = c;
            m.p = dfa.next(c.p, a);
            m.q = dfa.next(c.q, a);
            read_x(m, a);
            read_y(m, a);
            push(std::move(m));
        }
        if (c.edits == rules.budget) continue;
        for (Symbol a = 0; a < k; ++a) {
            if (rules.substitute) {
                for (Symbol b = 0; b < k; ++b) {
                    if (a == b) continue;
                    Config s = c;
                    s.p = dfa.next(c.p, a);
                    s.q = dfa.next(c.q, b);
                    ++s.edits;
                    read_x(s, a);
                    read_y(s, b);
                    push(std::move(s));
                }
            }
            if (rules.remove) {
                Config d = c;
                d.p = dfa.next(c.p, a);
                ++d.edits;
                read_x(d, a);
                push(std::move(d));
            }
            if (rules.add) {
                Config i = c;
                i.q = dfa.next(c.q, a);
                ++i.edits;
                read_y(i, a);
                push(std::move(i));
            }
        }
    }
    return false;
}

// Relations whose union bounds a composite relation in the extension proof.
std::vector<EditRelation> component_relations(const EditRelation& rel)
{
    std::vector<EditRelation> out{rel};
    switch (rel.kind) {
    case EditKind::Delete:
    case EditKind::Insert:
    case EditKind::Substitute: break;
    default:
        for (int i = 1; i <= rel.budget; ++i) {
            out.emplace_back(EditKind::Delete, i);
            out.emplace_back(EditKind::Insert, i);
            out.emplace_back(EditKind::Substitute, i);
        }
    }
    return out;
}

} // namespace

IndependenceReport is_independent(const FiniteLang& lang, const EditRelation& rel)
{
    if (rel.reflexive_possible() && !lang.empty()) {
        const Word& x = *lang.begin();
        return IndependenceReport{false, std::make_pair(x, x)};
    }
    for (const auto& x : lang) {
        for (const auto& y : lang) {
            if (relates(rel, x, y)) return IndependenceReport{false, std::make_pair(x, y)};
        }
    }
    return IndependenceReport{true, std::nullopt};
}

bool is_independent_regular(const RegularLang& lang, const EditRelation& rel)
{
    if (rel.reflexive_possible()) return lang.is_empty();
    AlignmentRules rules;
    rules.budget = static_cast<unsigned>(rel.budget);
    switch (rel.kind) {
    case EditKind::Delete:
    case EditKind::Insert:
        // τ and its converse give the same independent sets.
        rules.remove = true;
        rules.exact = true;
        break;
    case EditKind::DeleteUpTo:
    case EditKind::InsertUpTo:
        rules.remove = true;
        break;
    case EditKind::Substitute:
        rules.substitute = true;
        rules.exact = true;
        break;
    case EditKind::SubstituteUpTo:
        rules.substitute = true;
        break;
    case EditKind::Levenshtein:
    case EditKind::LevenshteinStrict:
        rules.substitute = rules.remove = rules.add = true;
        rules.need_distinct = true;
        break;
    }
    return !related_pair_exists(lang, rules);
}

std::optional<std::pair<Word, Word>> closure_violation(const FiniteLang& lang, const EditRelation& rel)
{
    for (const auto& x : lang) {
        for (const auto& y : apply(rel, x, lang.alphabet_size())) {
            if (!lang.contains(y)) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

bool is_closed(const FiniteLang& lang, const EditRelation& rel)
{
    return !closure_violation(lang, rel).has_value();
}

ExtensionWitness independent_extension_witness(const FiniteLang& lang, const EditRelation& rel)
{
    if (rel.reflexive_possible()) {
        throw PreconditionError("no set is independent for " + rel.name());
    }
    if (lang.contains_empty_word() || !is_code(lang)) throw PreconditionError("input is not a code");
    if (!is_independent(lang, rel)) throw PreconditionError("input is not " + rel.name() + "-independent");

    const RegularLang regular = RegularLang::from_finite(lang);
    if (is_complete(regular)) throw PreconditionError("complete input");

    ExtensionWitness out;
    out.external = shortest_external_witness(regular);
    const Word repeated = power(out.external, static_cast<std::size_t>(rel.budget) + 1);
    out.padding = make_overlapping_free(repeated, lang.alphabet_size());
    out.word = concat(repeated, out.padding);

    // Re-check everything the construction is supposed to guarantee.
    auto fail = [&](const std::string& what) {
        throw VerificationFailure("extension witness for " + rel.name() + ": " + what);
    };
    if (!is_overlapping_free(out.word)) fail("word is not overlapping-free");
    if (factor_language(star(regular)).contains(out.word)) fail("word is a factor of X*");
    for (const auto& component : component_relations(rel)) {
        for (const auto& x : lang) {
            if (relates(component, out.word, x)) fail("image of the word meets X");
            if (relates(component, x, out.word)) fail("word lies in the image of X");
        }
    }
    FiniteLang extended = lang;
    extended.insert(out.word);
    if (!is_code(extended)) fail("extended set is not a code");
    if (!is_independent(extended, rel)) fail("extended set is not independent");
    return out;
}

bool is_maximal_independent(const RegularLang& lang, const EditRelation& rel)
{
    if (rel.reflexive_possible()) throw PreconditionError("no set is independent for " + rel.name());
    if (lang.contains_empty_word() || !is_code_regular(lang)) throw PreconditionError("input is not a code");
    if (!is_independent_regular(lang, rel)) throw PreconditionError("input is not " + rel.name() + "-independent");
    return is_complete(lang);
}

std::size_t error_detection_margin(const FiniteLang& lang)
{
    if (lang.size() < 2) throw PreconditionError("error_detection_margin needs at least two words");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto x = lang.begin(); x != lang.end(); ++x) {
        for (auto y = std::next(x); y != lang.end(); ++y) best = std::min(best, levenshtein(*x, *y));
    }
    return best - 1;
}

} // namespace edcodes
