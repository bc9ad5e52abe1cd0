#pragma once

#include "edcodes/codes.hpp"
#include "edcodes/edit.hpp"

#include <optional>
#include <utility>

namespace edcodes {

struct IndependenceReport {
    bool independent = true;
    // (x, y) with x, y in X and y ∈ τ(x).
    std::optional<std::pair<Word, Word>> violation;

    explicit operator bool() const noexcept { return independent; }
};

// τ(X) ∩ X = ∅. For Λ_k with k >= 2 every nonempty set fails with (x, x).
IndependenceReport is_independent(const FiniteLang& lang, const EditRelation& rel);

// Same question for a regular language, decided by searching the product of
// two copies of the automaton under a bounded edit alignment.
bool is_independent_regular(const RegularLang& lang, const EditRelation& rel);

// First pair (x, y), shortlex in x then y, with y ∈ τ(x) \ X.
std::optional<std::pair<Word, Word>> closure_violation(const FiniteLang& lang, const EditRelation& rel);
// τ(X) ⊆ X.
bool is_closed(const FiniteLang& lang, const EditRelation& rel);

// A word that can be added to a non-complete independent code while
// keeping it an independent code: y = w^(k+1) u with w the shortlex-least
// word outside F(X*) and u the padding that makes y overlapping-free.
struct ExtensionWitness {
    Word external; // w
    Word padding;  // u
    Word word;     // y
};

// Throws PreconditionError("complete input") on complete X, and
// VerificationFailure if the construction does not check out.
ExtensionWitness independent_extension_witness(const FiniteLang& lang, const EditRelation& rel);

// Regular independent codes are maximal among independent codes iff they
// are complete.
bool is_maximal_independent(const RegularLang& lang, const EditRelation& rel);

// min levenshtein(x, y) - 1 over distinct x, y in X. Needs |X| >= 2.
std::size_t error_detection_margin(const FiniteLang& lang);

} // namespace edcodes
