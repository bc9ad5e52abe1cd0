#pragma once

#include "edcodes/errors.hpp"
#include "edcodes/finite_lang.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace edcodes {

// Word-list file:
//
//   # comment
//   alphabet: a b
//   ab
//   ba
//
// The first non-comment line declares the alphabet; every following
// non-blank line holds one word. A `#` at the start of a line, or after
// whitespace, starts a comment. `ε` on its own line is the empty word
// unless it is an alphabet symbol.
struct LanguageFile {
    Alphabet alphabet;
    FiniteLang words;
};

class LanguageFileError : public PreconditionError {
public:
    LanguageFileError(std::size_t line, const std::string& what)
        : PreconditionError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

LanguageFile parse_language_file(std::string_view text);
LanguageFile read_language_file(const std::filesystem::path& path);
std::string format_language_file(const LanguageFile& file);

// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

} // namespace edcodes
