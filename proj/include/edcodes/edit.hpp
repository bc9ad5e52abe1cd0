#pragma once

#include "edcodes/finite_lang.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace edcodes {

enum class EditKind {
    Delete,            // δ_k: exactly k deletions
    Insert,            // ι_k: exactly k insertions
    Substitute,        // σ_k: exactly k differing positions
    DeleteUpTo,        // Δ_k
    InsertUpTo,        // I_k
    SubstituteUpTo,    // Σ_k
    Levenshtein,       // Λ_k: 1..k single-letter edits, composed
    LevenshteinStrict, // Λ_k without the identity pairs
};

struct EditRelation {
    EditKind kind = EditKind::Delete;
    int budget = 1;

    EditRelation() = default;
    EditRelation(EditKind k, int b);

    // "delta:1", "sigma-upto:2", "lambda-strict:3", ... See README for the
    // accepted kind names.
    static EditRelation parse(std::string_view text);
    std::string name() const;

    // Converse relation: δ_k <-> ι_k, Δ_k <-> I_k; the others are symmetric.
    EditRelation inverse() const;
    bool length_preserving() const;
    // Whether the relation can contain (x, x).
    bool reflexive_possible() const;

    bool operator==(const EditRelation&) const = default;
};

// Exact image τ(w) over an alphabet of `alphabet_size` letters.
WordSet apply(const EditRelation& rel, const Word& w, std::size_t alphabet_size);
FiniteLang apply_set(const EditRelation& rel, const FiniteLang& lang);

// y ∈ τ(x), decided without enumerating τ(x).
bool relates(const EditRelation& rel, const Word& x, const Word& y);

std::size_t levenshtein(const Word& x, const Word& y);

// y ∈ Λ_p(x).
bool lambda_membership(const Word& x, const Word& y, int p);

// Symbolic description of the σ_k*-orbit of a word.
struct FullCube {
    std::size_t length;
    bool operator==(const FullCube&) const = default;
};
enum class Parity { Even, Odd };
struct ParityClass {
    std::size_t length;
    Parity parity; // parity of the number of letters 1
    bool operator==(const ParityClass&) const = default;
};
struct SelfPair {
    Word word; // the orbit is {word, complement(word)}
    bool operator==(const SelfPair&) const = default;
};
struct ExplicitOrbit {
    WordSet words;
    bool operator==(const ExplicitOrbit&) const = default;
};
using OrbitDescriptor = std::variant<FullCube, ParityClass, SelfPair, ExplicitOrbit>;

OrbitDescriptor sigma_star(const Word& w, int k, std::size_t alphabet_size);

boost::multiprecision::cpp_int orbit_cardinality(const OrbitDescriptor& orbit, std::size_t alphabet_size);

// Lists the orbit; throws GuardExceeded when it has more than max_words.
WordSet expand(const OrbitDescriptor& orbit, std::size_t alphabet_size, std::size_t max_words = 1U << 20);

std::string describe(const OrbitDescriptor& orbit, const Alphabet& alphabet);

struct ClosureResult {
    FiniteLang words;
    // Some image exceeded the length cap and was dropped.
    bool truncated = false;
};

// Least superset of X closed under τ among words of length <= length_cap.
ClosureResult closure_brute(const EditRelation& rel, const FiniteLang& lang, std::size_t length_cap);

} // namespace edcodes
