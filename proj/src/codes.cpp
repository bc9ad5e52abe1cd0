#include "edcodes/codes.hpp"

#include "edcodes/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace edcodes {

namespace {

bool is_proper_prefix(const Word& p, const Word& w)
{
    return p.size() < w.size() && std::equal(p.begin(), p.end(), w.begin());
}

Word suffix_from(const Word& w, std::size_t start)
{
    return Word(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
}

// A dangling suffix reached by the shortest-path search. The side flag says
// which factorization is currently ahead.
struct SearchNode {
    Word dangling;
    bool left_ahead = true;
    std::size_t parent = 0; // index of predecessor; self for roots
    Word appended;          // codeword appended to the lagging side
    Word root_long;         // only for roots
    Word root_short;
};

using StateSet = std::vector<RegularLang::State>;

StateSet sorted_unique(std::vector<RegularLang::State> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// { p : exists q in S, x in X with q.x = p }
StateSet residual_after_code(const RegularLang& dfa, const std::vector<bool>& live, const StateSet& from)
{
    const std::size_t n = dfa.state_count();
    std::vector<bool> seen(n * n, false);
    std::vector<std::pair<RegularLang::State, RegularLang::State>> work;
    for (auto q : from) {
        seen[q] = true; // pair (initial=0, q)
        work.emplace_back(0, q);
    }
    std::vector<RegularLang::State> out;
    while (!work.empty()) {
        auto [r, p] = work.back();
        work.pop_back();
        if (dfa.accepting(r) && live[p]) out.push_back(p);
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            auto r2 = dfa.next(r, a);
            if (!live[r2]) continue;
            auto p2 = dfa.next(p, a);
            if (!seen[r2 * n + p2]) {
                seen[r2 * n + p2] = true;
                work.emplace_back(r2, p2);
            }
        }
    }
    return sorted_unique(std::move(out));
}

// { initial.u : exists q in S with q.u accepting }, optionally u nonempty.
StateSet code_after_residual(const RegularLang& dfa, const std::vector<bool>& live, const StateSet& from,
                             bool nonempty_prefix)
{
    const std::size_t n = dfa.state_count();
    // state = (q, p, moved)
    std::vector<bool> seen(n * n * 2, false);
    std::vector<std::tuple<RegularLang::State, RegularLang::State, bool>> work;
    auto push = [&](RegularLang::State q, RegularLang::State p, bool moved) {
        std::size_t key = (q * n + p) * 2 + (moved ? 1 : 0);
        if (!seen[key]) {
            seen[key] = true;
            work.emplace_back(q, p, moved);
        }
    };
    for (auto q : from) push(q, 0, false);
    std::vector<RegularLang::State> out;
    while (!work.empty()) {
        auto [q, p, moved] = work.back();
        work.pop_back();
        if (dfa.accepting(q) && (moved || !nonempty_prefix)) out.push_back(p);
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            auto q2 = dfa.next(q, a);
            auto p2 = dfa.next(p, a);
            if (!live[q2] || !live[p2]) continue;
            push(q2, p2, true);
        }
    }
    return sorted_unique(std::move(out));
}

} // namespace

CodeReport is_code(const FiniteLang& lang)
{
    if (lang.contains_empty_word()) throw PreconditionError("is_code: the empty word is in the set");

    // Dijkstra over dangling suffixes keyed by the length of the leading
    // factorization; zero-weight edges occur when the lagging side catches
    // up without overtaking.
    std::vector<SearchNode> nodes;
    using Key = std::tuple<std::size_t, Word, std::size_t>; // cost, dangling, node index
    auto cmp = [](const Key& a, const Key& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return ShortlexLess{}(std::get<1>(b), std::get<1>(a));
        return std::get<2>(a) > std::get<2>(b);
    };
    std::priority_queue<Key, std::vector<Key>, decltype(cmp)> queue(cmp);
    std::map<Word, std::size_t> best; // dangling suffix -> best cost seen

    auto push = [&](SearchNode node, std::size_t cost) {
        auto it = best.find(node.dangling);
        if (it != best.end() && it->second <= cost) return;
        best[node.dangling] = cost;
        nodes.push_back(std::move(node));
        queue.emplace(cost, nodes.back().dangling, nodes.size() - 1);
    };

    for (const auto& x : lang) {
        for (const auto& y : lang) {
            if (is_proper_prefix(x, y)) {
                SearchNode root;
                root.dangling = suffix_from(y, x.size());
                root.parent = nodes.size();
                root.root_long = y;
                root.root_short = x;
                push(std::move(root), y.size());
            }
        }
    }

    std::set<Word, ShortlexLess> settled;
    while (!queue.empty()) {
        auto [cost, dangling, index] = queue.top();
        queue.pop();
        if (!settled.insert(dangling).second) continue;

        if (lang.contains(dangling)) {
            // Close the gap: rebuild both factorizations.
            std::vector<std::pair<Word, bool>> steps; // appended word, appended to left?
            bool last_lagging_left = !nodes[index].left_ahead;
            steps.emplace_back(dangling, last_lagging_left);
            std::size_t cur = index;
            while (nodes[cur].parent != cur) {
                const auto& parent = nodes[nodes[cur].parent];
                steps.emplace_back(nodes[cur].appended, !parent.left_ahead);
                cur = nodes[cur].parent;
            }
            Ambiguity amb;
            amb.left.push_back(nodes[cur].root_long);
            amb.right.push_back(nodes[cur].root_short);
            for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
                (it->second ? amb.left : amb.right).push_back(it->first);
            }
            for (const auto& w : amb.left) amb.word.insert(amb.word.end(), w.begin(), w.end());
            return CodeReport{false, std::move(amb)};
        }

        const bool left_ahead = nodes[index].left_ahead;
        for (const auto& z : lang) {
            SearchNode child;
            child.parent = index;
            child.appended = z;
            if (is_proper_prefix(z, dangling)) {
                child.dangling = suffix_from(dangling, z.size());
                child.left_ahead = left_ahead;
                push(std::move(child), cost);
            } else if (is_proper_prefix(dangling, z)) {
                child.dangling = suffix_from(z, dangling.size());
                child.left_ahead = !left_ahead;
                push(std::move(child), cost - dangling.size() + z.size());
            }
        }
    }
    return CodeReport{true, std::nullopt};
}

bool validates(const Ambiguity& ambiguity, const FiniteLang& lang)
{
    auto joined = [&](const std::vector<Word>& parts, Word& out) {
        for (const auto& p : parts) {
            if (!lang.contains(p)) return false;
            out.insert(out.end(), p.begin(), p.end());
        }
        return true;
    };
    Word left, right;
    if (!joined(ambiguity.left, left) || !joined(ambiguity.right, right)) return false;
    return left == ambiguity.word && right == ambiguity.word && ambiguity.left != ambiguity.right;
}

bool is_code_regular(const RegularLang& lang)
{
    if (lang.contains_empty_word()) throw PreconditionError("is_code_regular: the empty word is in the set");
    const auto live = lang.live_states();

    // U_n is held as (S, drop_empty): the union of right languages of the
    // states in S, minus the empty word when drop_empty is set (only U_1).
    StateSet current = residual_after_code(lang, live, {lang.initial()});
    bool drop_empty = true;
    std::set<std::pair<StateSet, bool>> visited;
    for (;;) {
        if (current.empty()) return true;
        if (!drop_empty && std::any_of(current.begin(), current.end(),
                                       [&](auto q) { return lang.accepting(q); })) {
            return false;
        }
        if (!visited.emplace(current, drop_empty).second) return true;
        StateSet left = residual_after_code(lang, live, current);
        StateSet right = code_after_residual(lang, live, current, drop_empty);
        left.insert(left.end(), right.begin(), right.end());
        current = sorted_unique(std::move(left));
        drop_empty = false;
    }
}

BernoulliDist::BernoulliDist(std::vector<Rational> weights) : weights_(std::move(weights))
{
    if (weights_.size() < 2) throw PreconditionError("distribution needs at least two letters");
    Rational total = 0;
    for (const auto& w : weights_) {
        if (w <= 0) throw PreconditionError("distribution weights must be positive");
        total += w;
    }
    if (total != 1) throw PreconditionError("distribution weights must sum to 1, got " + total.str());
}

BernoulliDist BernoulliDist::uniform(std::size_t alphabet_size)
{
    return BernoulliDist(std::vector<Rational>(alphabet_size, Rational(1, static_cast<long>(alphabet_size))));
}

Rational BernoulliDist::weight(const Word& w) const
{
    Rational p = 1;
    for (Symbol a : w) p *= weight(a);
    return p;
}

Rational bernoulli_measure(const FiniteLang& lang, const BernoulliDist& dist)
{
    if (lang.alphabet_size() != dist.alphabet_size()) throw PreconditionError("alphabet mismatch");
    Rational total = 0;
    for (const auto& w : lang) total += dist.weight(w);
    return total;
}

bool is_maximal_code(const RegularLang& lang)
{
    if (!is_code_regular(lang)) throw PreconditionError("is_maximal_code: input is not a code");
    return is_complete(lang);
}

Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational {
        throw PreconditionError("not a rational number: '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view digits) {
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            fail();
        }
        return boost::multiprecision::cpp_int(std::string(digits));
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) return fail();
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        boost::multiprecision::cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        auto num = parse_int(whole.empty() ? "0" : whole) * scale + (frac.empty() ? 0 : parse_int(frac));
        return Rational(num, scale);
    }
    return Rational(parse_int(text));
}

} // namespace edcodes
