#include "edcodes/regular_lang.hpp"

#include "edcodes/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace edcodes {

namespace {

using State = RegularLang::State;

// Nondeterministic automaton with epsilon moves; only used as an
// intermediate for concatenation, star and factor closure.
struct Nfa {
    std::size_t alphabet_size = 0;
    std::vector<std::vector<std::vector<State>>> moves; // [state][letter] -> targets
    std::vector<std::vector<State>> epsilon;
    std::vector<bool> accepting;
    std::vector<State> initial;

    State add_state(bool accept)
    {
        moves.emplace_back(alphabet_size);
        epsilon.emplace_back();
        accepting.push_back(accept);
        return static_cast<State>(accepting.size() - 1);
    }

    // Copies a DFA in, returning the offset of its states.
    State embed(const RegularLang& dfa)
    {
        auto offset = static_cast<State>(accepting.size());
        for (State q = 0; q < dfa.state_count(); ++q) add_state(dfa.accepting(q));
        for (State q = 0; q < dfa.state_count(); ++q) {
            for (Symbol a = 0; a < alphabet_size; ++a) {
                moves[offset + q][a].push_back(offset + dfa.next(q, a));
            }
        }
        return offset;
    }
};

std::vector<State> epsilon_closure(const Nfa& nfa, std::vector<State> states)
{
    std::vector<bool> seen(nfa.accepting.size(), false);
    std::vector<State> stack;
    for (State q : states) {
        if (!seen[q]) {
            seen[q] = true;
            stack.push_back(q);
        }
    }
    std::vector<State> out;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        out.push_back(q);
        for (State r : nfa.epsilon[q]) {
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RegularLang determinize(const Nfa& nfa)
{
    const std::size_t k = nfa.alphabet_size;
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    std::vector<State> table;
    std::vector<bool> accepting;

    auto intern = [&](std::vector<State> subset) {
        auto [it, inserted] = index.emplace(subset, static_cast<State>(subsets.size()));
        if (inserted) {
            bool accept = std::any_of(subset.begin(), subset.end(),
                                      [&](State q) { return nfa.accepting[q]; });
            subsets.push_back(std::move(subset));
            accepting.push_back(accept);
        }
        return it->second;
    };

    intern(epsilon_closure(nfa, nfa.initial));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (Symbol a = 0; a < k; ++a) {
            std::vector<State> targets;
            for (State q : subsets[i]) {
                const auto& m = nfa.moves[q][a];
                targets.insert(targets.end(), m.begin(), m.end());
            }
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            State t = intern(epsilon_closure(nfa, std::move(targets)));
            table.resize(std::max(table.size(), (i + 1) * k));
            table[i * k + a] = t;
        }
    }
    return RegularLang(k, table, accepting, 0);
}

template <typename Combine>
RegularLang product(const RegularLang& lhs, const RegularLang& rhs, Combine combine)
{
    if (lhs.alphabet_size() != rhs.alphabet_size()) throw PreconditionError("alphabet mismatch");
    const std::size_t k = lhs.alphabet_size();
    const std::size_t width = rhs.state_count();
    std::vector<State> id(lhs.state_count() * width, State(-1));
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> table;
    std::vector<bool> accepting;

    auto intern = [&](State p, State q) {
        State& slot = id[p * width + q];
        if (slot == State(-1)) {
            slot = static_cast<State>(pairs.size());
            pairs.emplace_back(p, q);
            accepting.push_back(combine(lhs.accepting(p), rhs.accepting(q)));
        }
        return slot;
    };
    intern(0, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        table.resize((i + 1) * k);
        for (Symbol a = 0; a < k; ++a) table[i * k + a] = intern(lhs.next(p, a), rhs.next(q, a));
    }
    return RegularLang(k, table, accepting, 0);
}

struct RegexParser {
    std::vector<std::string> chars;
    std::size_t pos = 0;
    const Alphabet& alphabet;

    RegexParser(std::string_view pattern, const Alphabet& a) : alphabet(a)
    {
        for (auto& ch : utf8_characters(pattern)) {
            if (ch != " " && ch != "\t") chars.push_back(std::move(ch));
        }
    }

    bool at(std::string_view s) const { return pos < chars.size() && chars[pos] == s; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw PreconditionError("regex: " + what + " at position " + std::to_string(pos));
    }

    RegularLang alternation()
    {
        RegularLang out = sequence();
        while (at("|")) {
            ++pos;
            out = union_of(out, sequence());
        }
        return out;
    }

    RegularLang sequence()
    {
        RegularLang out = RegularLang::epsilon(alphabet.size());
        while (pos < chars.size() && !at("|") && !at(")")) out = concat(out, repetition());
        return out;
    }

    RegularLang repetition()
    {
        RegularLang out = atom();
        for (;;) {
            if (at("*")) out = star(out);
            else if (at("+")) out = plus(out);
            else if (at("?")) out = union_of(out, RegularLang::epsilon(alphabet.size()));
            else break;
            ++pos;
        }
        return out;
    }

    RegularLang atom()
    {
        if (pos >= chars.size()) fail("unexpected end");
        const std::string& ch = chars[pos];
        if (ch == "(") {
            ++pos;
            RegularLang inner = alternation();
            if (!at(")")) fail("expected ')'");
            ++pos;
            return inner;
        }
        if (auto index = alphabet.index_of(ch)) {
            ++pos;
            return RegularLang::from_word(alphabet.size(), Word{*index});
        }
        if (ch == ".") {
            ++pos;
            return RegularLang::words_of_length(alphabet.size(), 1);
        }
        if (ch == "ε") {
            ++pos;
            return RegularLang::epsilon(alphabet.size());
        }
        fail("unexpected '" + ch + "'");
    }
};

} // namespace

RegularLang::RegularLang(std::size_t alphabet_size, const std::vector<State>& transitions,
                         const std::vector<bool>& accepting, State initial)
    : alphabet_size_(alphabet_size)
{
    const std::size_t k = alphabet_size;
    const std::size_t n = accepting.size();
    if (k == 0 || transitions.size() != n * k || initial >= n) {
        throw PreconditionError("malformed automaton table");
    }

    // Reachable part.
    std::vector<State> reach_id(n, State(-1));
    std::vector<State> order{initial};
    reach_id[initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Symbol a = 0; a < k; ++a) {
            State t = transitions[order[i] * k + a];
            if (reach_id[t] == State(-1)) {
                reach_id[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    const std::size_t m = order.size();

    // Moore partition refinement.
    std::vector<State> block(m);
    for (std::size_t i = 0; i < m; ++i) block[i] = accepting[order[i]] ? 1 : 0;
    std::size_t block_count = 0;
    for (;;) {
        std::map<std::vector<State>, State> signature_id;
        std::vector<State> refined(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<State> sig;
            sig.reserve(k + 1);
            sig.push_back(block[i]);
            for (Symbol a = 0; a < k; ++a) sig.push_back(block[reach_id[transitions[order[i] * k + a]]]);
            auto [it, inserted] = signature_id.emplace(std::move(sig), static_cast<State>(signature_id.size()));
            refined[i] = it->second;
        }
        std::size_t count = signature_id.size();
        block = std::move(refined);
        if (count == block_count) break;
        block_count = count;
    }

    // BFS renumbering of blocks.
    std::vector<State> representative(block_count, State(-1));
    for (std::size_t i = 0; i < m; ++i) {
        if (representative[block[i]] == State(-1)) representative[block[i]] = static_cast<State>(i);
    }
    std::vector<State> canon(block_count, State(-1));
    std::vector<State> canon_order{block[0]};
    canon[block[0]] = 0;
    for (std::size_t i = 0; i < canon_order.size(); ++i) {
        State rep = representative[canon_order[i]];
        for (Symbol a = 0; a < k; ++a) {
            State b = block[reach_id[transitions[order[rep] * k + a]]];
            if (canon[b] == State(-1)) {
                canon[b] = static_cast<State>(canon_order.size());
                canon_order.push_back(b);
            }
        }
    }
    table_.resize(block_count * k);
    accepting_.resize(block_count);
    for (std::size_t i = 0; i < block_count; ++i) {
        State rep = representative[canon_order[i]];
        accepting_[i] = accepting[order[rep]];
        for (Symbol a = 0; a < k; ++a) {
            table_[i * k + a] = canon[block[reach_id[transitions[order[rep] * k + a]]]];
        }
    }
}

RegularLang RegularLang::empty(std::size_t alphabet_size)
{
    return RegularLang(alphabet_size, std::vector<State>(alphabet_size, 0), {false}, 0);
}

RegularLang RegularLang::epsilon(std::size_t alphabet_size)
{
    return RegularLang(alphabet_size, std::vector<State>(2 * alphabet_size, 1), {true, false}, 0);
}

RegularLang RegularLang::all_words(std::size_t alphabet_size)
{
    return RegularLang(alphabet_size, std::vector<State>(alphabet_size, 0), {true}, 0);
}

RegularLang RegularLang::words_of_length(std::size_t alphabet_size, std::size_t length)
{
    // States 0..length count letters read; length+1 is the sink.
    std::vector<State> table((length + 2) * alphabet_size);
    std::vector<bool> accepting(length + 2, false);
    accepting[length] = true;
    for (std::size_t q = 0; q <= length + 1; ++q) {
        State t = static_cast<State>(std::min(q + 1, length + 1));
        for (std::size_t a = 0; a < alphabet_size; ++a) table[q * alphabet_size + a] = t;
    }
    return RegularLang(alphabet_size, table, accepting, 0);
}

RegularLang RegularLang::from_word(std::size_t alphabet_size, const Word& w)
{
    FiniteLang lang(alphabet_size);
    lang.insert(w);
    return from_finite(lang);
}

RegularLang RegularLang::from_finite(const FiniteLang& lang)
{
    // Trie with a sink at index 1.
    const std::size_t k = lang.alphabet_size();
    std::vector<State> table(2 * k, 1);
    std::vector<bool> accepting{false, false};
    for (const auto& w : lang) {
        State q = 0;
        for (Symbol a : w) {
            State& slot = table[q * k + a];
            if (slot == 1) {
                slot = static_cast<State>(accepting.size());
                accepting.push_back(false);
                table.resize(table.size() + k, 1);
            }
            q = table[q * k + a];
        }
        accepting[q] = true;
    }
    return RegularLang(k, table, accepting, 0);
}

RegularLang RegularLang::parse(std::string_view pattern, const Alphabet& alphabet)
{
    RegexParser parser(pattern, alphabet);
    RegularLang out = parser.alternation();
    if (parser.pos != parser.chars.size()) parser.fail("unbalanced ')'");
    return out;
}

RegularLang::State RegularLang::run(State from, const Word& w) const
{
    State q = from;
    for (Symbol a : w) {
        if (a >= alphabet_size_) throw PreconditionError("word uses a letter outside the alphabet");
        q = next(q, a);
    }
    return q;
}

bool RegularLang::is_empty() const
{
    // Canonical form: the empty language is the single rejecting state.
    return std::none_of(accepting_.begin(), accepting_.end(), [](bool b) { return b; });
}

bool RegularLang::is_finite() const
{
    // Finite iff no cycle runs through live states.
    auto live = live_states();
    enum class Mark { New, Open, Done };
    std::vector<Mark> mark(state_count(), Mark::New);
    auto has_cycle = [&](auto&& self, State q) -> bool {
        mark[q] = Mark::Open;
        for (Symbol a = 0; a < alphabet_size_; ++a) {
            State t = next(q, a);
            if (!live[t]) continue;
            if (mark[t] == Mark::Open) return true;
            if (mark[t] == Mark::New && self(self, t)) return true;
        }
        mark[q] = Mark::Done;
        return false;
    };
    return !live[0] || !has_cycle(has_cycle, 0);
}

std::vector<bool> RegularLang::live_states() const
{
    const std::size_t n = state_count();
    std::vector<std::vector<State>> reverse(n);
    for (State q = 0; q < n; ++q) {
        for (Symbol a = 0; a < alphabet_size_; ++a) reverse[next(q, a)].push_back(q);
    }
    std::vector<bool> live(accepting_.begin(), accepting_.end());
    std::vector<State> stack;
    for (State q = 0; q < n; ++q) {
        if (live[q]) stack.push_back(q);
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : reverse[q]) {
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
        }
    }
    return live;
}

std::optional<Word> RegularLang::shortest_word() const
{
    const std::size_t n = state_count();
    std::vector<State> parent(n, State(-1));
    std::vector<Symbol> via(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<State> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        if (accepting_[q]) {
            Word w;
            for (State s = q; s != 0; s = parent[s]) w.push_back(via[s]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Symbol a = 0; a < alphabet_size_; ++a) {
            State t = next(q, a);
            if (!seen[t]) {
                seen[t] = true;
                parent[t] = q;
                via[t] = a;
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

WordSet RegularLang::words_up_to(std::size_t max_length) const
{
    WordSet out;
    auto live = live_states();
    Word prefix;
    // Depth-first walk restricted to live states.
    auto walk = [&](auto&& self, State q) -> void {
        if (accepting_[q]) out.insert(prefix);
        if (prefix.size() == max_length) return;
        for (Symbol a = 0; a < alphabet_size_; ++a) {
            State t = next(q, a);
            if (!live[t]) continue;
            prefix.push_back(a);
            self(self, t);
            prefix.pop_back();
        }
    };
    if (live[0]) walk(walk, 0);
    return out;
}

std::string RegularLang::to_dot(const Alphabet& alphabet, std::string_view name) const
{
    if (alphabet.size() != alphabet_size_) throw PreconditionError("alphabet mismatch");
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  start [shape=point];\n";
    for (State q = 0; q < state_count(); ++q) {
        out << "  q" << q << " [shape=" << (accepting_[q] ? "doublecircle" : "circle") << "];\n";
    }
    out << "  start -> q0;\n";
    for (State q = 0; q < state_count(); ++q) {
        // Group letters that share a target.
        std::map<State, std::string> labels;
        for (Symbol a = 0; a < alphabet_size_; ++a) {
            auto& label = labels[next(q, a)];
            if (!label.empty()) label += ",";
            label += alphabet.symbol(a);
        }
        for (const auto& [target, label] : labels) {
            out << "  q" << q << " -> q" << target << " [label=\"" << label << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

RegularLang union_of(const RegularLang& lhs, const RegularLang& rhs)
{
    return product(lhs, rhs, [](bool a, bool b) { return a || b; });
}

RegularLang intersection(const RegularLang& lhs, const RegularLang& rhs)
{
    return product(lhs, rhs, [](bool a, bool b) { return a && b; });
}

RegularLang difference(const RegularLang& lhs, const RegularLang& rhs)
{
    return product(lhs, rhs, [](bool a, bool b) { return a && !b; });
}

RegularLang complement(const RegularLang& lang)
{
    const std::size_t k = lang.alphabet_size();
    std::vector<State> table(lang.state_count() * k);
    std::vector<bool> accepting(lang.state_count());
    for (State q = 0; q < lang.state_count(); ++q) {
        accepting[q] = !lang.accepting(q);
        for (Symbol a = 0; a < k; ++a) table[q * k + a] = lang.next(q, a);
    }
    return RegularLang(k, table, accepting, 0);
}

RegularLang concat(const RegularLang& lhs, const RegularLang& rhs)
{
    if (lhs.alphabet_size() != rhs.alphabet_size()) throw PreconditionError("alphabet mismatch");
    Nfa nfa;
    nfa.alphabet_size = lhs.alphabet_size();
    State left = nfa.embed(lhs);
    State right = nfa.embed(rhs);
    for (State q = 0; q < lhs.state_count(); ++q) {
        if (lhs.accepting(q)) {
            nfa.accepting[left + q] = false;
            nfa.epsilon[left + q].push_back(right);
        }
    }
    nfa.initial = {left};
    return determinize(nfa);
}

RegularLang star(const RegularLang& lang)
{
    Nfa nfa;
    nfa.alphabet_size = lang.alphabet_size();
    State start = nfa.add_state(true);
    State body = nfa.embed(lang);
    nfa.epsilon[start].push_back(body);
    for (State q = 0; q < lang.state_count(); ++q) {
        if (lang.accepting(q)) nfa.epsilon[body + q].push_back(body);
    }
    nfa.initial = {start};
    return determinize(nfa);
}

RegularLang plus(const RegularLang& lang) { return concat(lang, star(lang)); }

bool is_subset(const RegularLang& lhs, const RegularLang& rhs)
{
    return difference(lhs, rhs).is_empty();
}

RegularLang factor_language(const RegularLang& lang)
{
    // Every state of a canonical automaton is reachable, so the useful
    // states are exactly the live ones. A factor is the label of any path
    // between two useful states.
    auto live = lang.live_states();
    if (!live[0]) return RegularLang::empty(lang.alphabet_size());
    Nfa nfa;
    nfa.alphabet_size = lang.alphabet_size();
    for (State q = 0; q < lang.state_count(); ++q) nfa.add_state(live[q]);
    for (State q = 0; q < lang.state_count(); ++q) {
        if (!live[q]) continue;
        nfa.initial.push_back(q);
        for (Symbol a = 0; a < nfa.alphabet_size; ++a) {
            State t = lang.next(q, a);
            if (live[t]) nfa.moves[q][a].push_back(t);
        }
    }
    return determinize(nfa);
}

bool is_complete(const RegularLang& lang)
{
    return factor_language(star(lang)) == RegularLang::all_words(lang.alphabet_size());
}

// Positions (x, i) with i letters of x read. Every factor of X* is read
// from some position, so X is complete iff no word empties the set of all
// positions under the subset construction.
bool is_complete(const FiniteLang& lang)
{
    std::vector<const Word*> words;
    std::vector<std::size_t> base;
    std::size_t total = 0;
    for (const auto& w : lang) {
        if (w.empty()) continue;
        words.push_back(&w);
        base.push_back(total);
        total += w.size();
    }
    if (words.empty()) return false;

    using Bits = std::vector<std::uint64_t>;
    const std::size_t blocks = (total + 63) / 64;
    auto set_bit = [](Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); };
    Bits starts(blocks, 0);
    for (auto b : base) set_bit(starts, b);
    Bits all(blocks, 0);
    for (std::size_t i = 0; i < total; ++i) set_bit(all, i);

    std::set<Bits> seen{all};
    std::deque<Bits> queue{all};
    while (!queue.empty()) {
        const Bits current = std::move(queue.front());
        queue.pop_front();
        for (std::size_t a = 0; a < lang.alphabet_size(); ++a) {
            Bits next(blocks, 0);
            bool any = false;
            for (std::size_t j = 0; j < words.size(); ++j) {
                const Word& w = *words[j];
                for (std::size_t i = 0; i < w.size(); ++i) {
                    const std::size_t p = base[j] + i;
                    if (!(current[p / 64] >> (p % 64) & 1U) || w[i] != a) continue;
                    any = true;
                    if (i + 1 < w.size()) {
                        set_bit(next, p + 1);
                    } else {
                        for (std::size_t k = 0; k < blocks; ++k) next[k] |= starts[k];
                    }
                }
            }
            if (!any) return false;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return true;
}

Word shortest_external_witness(const RegularLang& lang)
{
    auto outside = complement(factor_language(star(lang))).shortest_word();
    if (!outside) throw PreconditionError("language complete");
    return *outside;
}

} // namespace edcodes
