#pragma once

#include "edcodes/indep.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace edcodes {

// Resource bounds for the exhaustive searches below. Exceeding either one
// throws GuardExceeded; results are never silently truncated.
struct SearchLimits {
    std::size_t max_words = 60;
    std::size_t max_nodes = std::size_t{1} << 20;
};

// ---------------------------------------------------------------------------
// Completion of a non-complete regular code into a complete one,
// Y = X ∪ y(Uy)* with U = A* \ (X* ∪ A*yA*).

struct ErCompletion {
    Word external;  // shortlex-least word outside F(X*)
    Word separator; // y = external^2 . padding, overlapping-free
    RegularLang filler;
    RegularLang completed;
    std::string expression;
};

// Verifies X ⊆ Y, that Y is a code and that Y is complete before returning.
ErCompletion er_completion(const RegularLang& lang, const Alphabet& alphabet);

// ---------------------------------------------------------------------------
// δ_k-closed codes

// Lengths a word of a δ_k-closed code may have: [1, k²-k-1] \ {k}.
std::vector<std::size_t> delta_closed_length_bound(int k);

struct EnumerationStats {
    std::size_t nodes = 0;
    std::size_t emitted = 0;
};

// Calls `emit` for every nonempty δ_k-closed code over the alphabet, in
// generator order. `emit` returns false to stop early. When `required` is
// given only supersets of it are produced.
EnumerationStats enumerate_delta_closed_codes(std::size_t alphabet_size, int k,
                                              const std::function<bool(const FiniteLang&)>& emit,
                                              const SearchLimits& limits = {},
                                              const FiniteLang* required = nullptr);

std::vector<FiniteLang> delta_closed_codes(std::size_t alphabet_size, int k, const SearchLimits& limits = {});

// Every complete δ_k-closed code containing X.
std::vector<FiniteLang> embed_delta_closed(const FiniteLang& lang, int k, const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// Relations under which no code is closed (ι_k, Δ_k, I_k)

struct NoClosedCodeWitness {
    Word source;             // x ∈ X
    Word target;             // x^(k+1) for insertions, ε for deletions
    std::vector<Word> chain; // source = chain[0] -> ... -> chain.back() = target
    EditRelation step;       // relation relating consecutive chain entries
    std::string explanation;
};

NoClosedCodeWitness assert_no_closed_code(const FiniteLang& lang, const EditRelation& rel, const Alphabet& alphabet);

// ---------------------------------------------------------------------------
// Codes closed under substitutions

struct ConditionD {
    bool k_even = false;
    bool binary_alphabet = false;
    bool exceeds_k = false; // X ⊄ A^{<=k}

    bool holds() const noexcept { return k_even && binary_alphabet && exceeds_k; }
};

ConditionD condition_d(const FiniteLang& lang, int k);

enum class ClosedShape { ShortWords, UniformFull, ParityHalf, NotClosedCode };

struct ClosedCodeClassification {
    ClosedShape shape = ClosedShape::NotClosedCode;
    std::size_t length = 0;      // UniformFull, ParityHalf
    Parity parity = Parity::Even; // ParityHalf
    std::string reason;          // NotClosedCode
    std::optional<std::pair<Word, Word>> violation;
    ConditionD condition;
};

std::string describe(const ClosedCodeClassification& c);

ClosedCodeClassification classify_sigma_closed(const FiniteLang& lang, int k);

// Every complete σ_k-closed code containing the non-complete σ_k-closed
// code X.
std::vector<FiniteLang> sigma_closed_completion(const FiniteLang& lang, int k, const SearchLimits& limits = {});

// Σ_k and Λ_k: a closed code must be a full uniform code A^n.
ClosedCodeClassification classify_composite_closed(const FiniteLang& lang, const EditRelation& rel);

} // namespace edcodes
