#include "edcodes/language_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace edcodes {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line)
{
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) return line.substr(0, i);
    }
    return line;
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string token; in >> token;) out.push_back(token);
    return out;
}

} // namespace

LanguageFile parse_language_file(std::string_view text)
{
    std::optional<Alphabet> alphabet;
    std::optional<FiniteLang> words;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = trim(strip_comment(text.substr(start, end - start)));
        ++line_no;
        start = end + 1;
        if (line.empty()) continue;

        if (!alphabet) {
            constexpr std::string_view header = "alphabet:";
            if (line.substr(0, header.size()) != header) {
                throw LanguageFileError(line_no, "expected 'alphabet: s1 s2 ...' header");
            }
            try {
                alphabet.emplace(split_ws(line.substr(header.size())));
            } catch (const PreconditionError& e) {
                throw LanguageFileError(line_no, e.what());
            }
            words.emplace(alphabet->size());
            continue;
        }
        if (line.find_first_of(" \t") != std::string_view::npos) {
            throw LanguageFileError(line_no, "one word per line expected");
        }
        Word w;
        if (line != "ε" || alphabet->index_of("ε")) {
            try {
                w = alphabet->parse(line);
            } catch (const PreconditionError& e) {
                throw LanguageFileError(line_no, e.what());
            }
        }
        if (!words->insert(std::move(w))) {
            throw LanguageFileError(line_no, "duplicate word '" + std::string(line) + "'");
        }
    }
    if (!alphabet) throw LanguageFileError(line_no, "missing alphabet header");
    return LanguageFile{*alphabet, *words};
}

LanguageFile read_language_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_language_file(buffer.str());
}

std::string format_language_file(const LanguageFile& file)
{
    std::string out = "alphabet:";
    for (const auto& s : file.alphabet.symbols()) out += " " + s;
    out += "\n";
    for (const auto& w : file.words) out += (w.empty() ? std::string("ε") : file.alphabet.format(w)) + "\n";
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace edcodes
