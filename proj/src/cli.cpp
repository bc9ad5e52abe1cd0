#include "edcodes/cli.hpp"

#include "edcodes/closure.hpp"
#include "edcodes/language_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace edcodes::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kOrbitExpansionLimit = 4096;
constexpr int kInternalError = 4;

struct Options {
    std::string file;
    std::string relation;
    bool independent = false;
    bool closed = false;
    std::string dist = "uniform";
    std::string word;
    std::string alphabet = "0 1";
    int k = 1;
    bool expand = false;
    bool json_output = false;
    std::size_t max_nodes = SearchLimits{}.max_nodes;
};

struct Input {
    LanguageFile lang;
    std::string digest;
};

std::string word_text(const Alphabet& alphabet, const Word& w)
{
    return w.empty() ? std::string("ε") : alphabet.format(w);
}

json words_json(const Alphabet& alphabet, const FiniteLang& lang)
{
    json out = json::array();
    for (const auto& w : lang) out.push_back(word_text(alphabet, w));
    return out;
}

json words_json(const Alphabet& alphabet, const std::vector<Word>& words)
{
    json out = json::array();
    for (const auto& w : words) out.push_back(word_text(alphabet, w));
    return out;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Input load(const std::string& path, json& report)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    Input input{parse_language_file(text), "fnv1a64:" + hex64(fnv1a64(text))};
    report["input"] = {{"path", path},
                       {"digest", input.digest},
                       {"alphabet", input.lang.alphabet.symbols()},
                       {"words", words_json(input.lang.alphabet, input.lang.words)}};
    return input;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

void check_witness(bool ok, const char* what)
{
    if (!ok) throw VerificationFailure(std::string("witness failed re-validation: ") + what);
}

int cmd_check(const Options& opt, json& report)
{
    if (opt.independent == opt.closed) throw PreconditionError("exactly one of --independent, --closed is required");
    const auto input = load(opt.file, report);
    const auto& alphabet = input.lang.alphabet;
    const auto& lang = input.lang.words;
    const auto rel = EditRelation::parse(opt.relation);
    report["relation"] = rel.name();

    std::optional<std::pair<Word, Word>> violation;
    if (opt.independent) {
        report["property"] = "independent";
        violation = is_independent(lang, rel).violation;
        if (violation) {
            const auto& [x, y] = *violation;
            check_witness(lang.contains(x) && lang.contains(y) && relates(rel, x, y), "independence violation");
        }
    } else {
        report["property"] = "closed";
        violation = closure_violation(lang, rel);
        if (violation) {
            const auto& [x, y] = *violation;
            check_witness(lang.contains(x) && !lang.contains(y) && relates(rel, x, y), "closure violation");
        }
    }
    report["verdict"] = !violation.has_value();
    if (violation) {
        report["witness"] = {{"x", word_text(alphabet, violation->first)},
                             {"y", word_text(alphabet, violation->second)}};
    }
    return violation ? Fails : Holds;
}

int cmd_code(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto& alphabet = input.lang.alphabet;
    const auto result = is_code(input.lang.words);
    report["property"] = "code";
    report["verdict"] = result.is_code;
    if (result.counterexample) {
        const auto& amb = *result.counterexample;
        check_witness(validates(amb, input.lang.words), "ambiguous factorization");
        report["witness"] = {{"word", word_text(alphabet, amb.word)},
                             {"left", words_json(alphabet, amb.left)},
                             {"right", words_json(alphabet, amb.right)}};
    }
    return result.is_code ? Holds : Fails;
}

int cmd_complete(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto& alphabet = input.lang.alphabet;
    const bool complete = is_complete(input.lang.words);
    report["property"] = "complete";
    report["verdict"] = complete;
    if (!complete) {
        const auto regular = RegularLang::from_finite(input.lang.words);
        const auto w = shortest_external_witness(regular);
        check_witness(!factor_language(star(regular)).contains(w), "external word");
        report["witness"] = {{"external", word_text(alphabet, w)}};
    }
    return complete ? Holds : Fails;
}

int cmd_measure(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto sigma = input.lang.alphabet.size();
    std::vector<Rational> weights;
    if (opt.dist == "uniform") {
        weights.assign(sigma, Rational(1, static_cast<long>(sigma)));
    } else {
        for (const auto& token : split_list(opt.dist)) weights.push_back(parse_rational(token));
        if (weights.size() != sigma) {
            throw PreconditionError("--dist needs " + std::to_string(sigma) + " weights, got " +
                                    std::to_string(weights.size()));
        }
    }
    const BernoulliDist dist(weights);
    const auto measure = bernoulli_measure(input.lang.words, dist);
    json w = json::array();
    for (const auto& r : weights) w.push_back(r.str());
    report["distribution"] = w;
    report["measure"] = measure.str();
    report["measure_equals_one"] = measure == 1;
    return Holds;
}

int cmd_orbit(const Options& opt, json& report)
{
    const Alphabet alphabet(split_list(opt.alphabet));
    const auto w = alphabet.parse(opt.word);
    const auto orbit = sigma_star(w, opt.k, alphabet.size());
    const auto cardinality = orbit_cardinality(orbit, alphabet.size());
    report["word"] = word_text(alphabet, w);
    report["alphabet"] = alphabet.symbols();
    report["k"] = opt.k;
    report["descriptor"] = describe(orbit, alphabet);
    report["cardinality"] = cardinality.str();
    if (opt.expand) {
        if (cardinality > kOrbitExpansionLimit) throw GuardExceeded("orbit expansion", kOrbitExpansionLimit);
        const auto words = expand(orbit, alphabet.size(), kOrbitExpansionLimit);
        check_witness(words.size() == cardinality && words.count(w) == 1, "orbit expansion");
        report["words"] = words_json(alphabet, FiniteLang(alphabet.size(), words));
    }
    return Holds;
}

void verify_closed_completion(const FiniteLang& candidate, const FiniteLang& lang, const EditRelation& rel)
{
    check_witness(lang.is_subset_of(candidate), "completion contains input");
    check_witness(is_code(candidate).is_code, "completion is a code");
    check_witness(is_closed(candidate, rel), "completion is closed");
    check_witness(is_complete(candidate), "completion is complete");
}

int cmd_complete_closed(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto& lang = input.lang.words;
    const auto rel = EditRelation::parse(opt.relation);
    report["relation"] = rel.name();
    SearchLimits limits;
    limits.max_nodes = opt.max_nodes;

    std::vector<FiniteLang> completions;
    switch (rel.kind) {
    case EditKind::Delete: completions = embed_delta_closed(lang, rel.budget, limits); break;
    case EditKind::Substitute: completions = sigma_closed_completion(lang, rel.budget, limits); break;
    default: throw PreconditionError("complete-closed supports delta:K and sigma:K");
    }
    json list = json::array();
    for (const auto& c : completions) {
        verify_closed_completion(c, lang, rel);
        list.push_back(words_json(input.lang.alphabet, c));
    }
    report["completions"] = list;
    report["count"] = completions.size();
    return completions.empty() ? Fails : Holds;
}

int cmd_er_complete(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto& alphabet = input.lang.alphabet;
    const auto x = RegularLang::from_finite(input.lang.words);
    const auto er = er_completion(x, alphabet);
    const bool contains = is_subset(x, er.completed);
    const bool code = is_code_regular(er.completed);
    const bool complete = is_complete(er.completed);
    check_witness(contains && code && complete, "completion");
    report["external"] = word_text(alphabet, er.external);
    report["separator"] = word_text(alphabet, er.separator);
    report["expression"] = er.expression;
    report["states"] = er.completed.state_count();
    report["verified"] = {{"contains_input", contains}, {"is_code", code}, {"is_complete", complete}};
    report["dot"] = er.completed.to_dot(alphabet, "Y");
    return Holds;
}

int cmd_extend(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto& alphabet = input.lang.alphabet;
    const auto rel = EditRelation::parse(opt.relation);
    report["relation"] = rel.name();
    const auto ext = independent_extension_witness(input.lang.words, rel);
    auto extended = input.lang.words;
    extended.insert(ext.word);
    check_witness(!input.lang.words.contains(ext.word) && is_code(extended).is_code &&
                      is_independent(extended, rel).independent,
                  "extension");
    report["external"] = word_text(alphabet, ext.external);
    report["padding"] = word_text(alphabet, ext.padding);
    report["word"] = word_text(alphabet, ext.word);
    report["extended"] = words_json(alphabet, extended);
    return Holds;
}

int cmd_no_closed(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto& alphabet = input.lang.alphabet;
    const auto rel = EditRelation::parse(opt.relation);
    report["relation"] = rel.name();
    const auto w = assert_no_closed_code(input.lang.words, rel, alphabet);
    check_witness(w.chain.front() == w.source && w.chain.back() == w.target, "chain endpoints");
    for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
        check_witness(relates(w.step, w.chain[i], w.chain[i + 1]), "chain step");
    }
    report["source"] = word_text(alphabet, w.source);
    report["target"] = word_text(alphabet, w.target);
    report["step"] = w.step.name();
    report["chain"] = words_json(alphabet, w.chain);
    report["explanation"] = w.explanation;
    return Holds;
}

int cmd_classify(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto& alphabet = input.lang.alphabet;
    const auto rel = EditRelation::parse(opt.relation);
    report["relation"] = rel.name();
    const auto c = rel.kind == EditKind::Substitute ? classify_sigma_closed(input.lang.words, rel.budget)
                                                    : classify_composite_closed(input.lang.words, rel);
    report["shape"] = describe(c);
    report["condition_d"] = {{"k_even", c.condition.k_even},
                             {"binary_alphabet", c.condition.binary_alphabet},
                             {"exceeds_k", c.condition.exceeds_k},
                             {"holds", c.condition.holds()}};
    if (c.violation) {
        report["witness"] = {{"x", word_text(alphabet, c.violation->first)},
                             {"y", word_text(alphabet, c.violation->second)}};
    }
    return c.shape == ClosedShape::NotClosedCode ? Fails : Holds;
}

int cmd_margin(const Options& opt, json& report)
{
    const auto input = load(opt.file, report);
    const auto margin = error_detection_margin(input.lang.words);
    report["margin"] = margin;
    return Holds;
}

int cmd_enumerate(const Options& opt, json& report)
{
    const Alphabet alphabet(split_list(opt.alphabet));
    SearchLimits limits;
    limits.max_nodes = opt.max_nodes;
    report["alphabet"] = alphabet.symbols();
    report["k"] = opt.k;
    json list = json::array();
    const auto stats = enumerate_delta_closed_codes(
        alphabet.size(), opt.k,
        [&](const FiniteLang& code) {
            list.push_back(words_json(alphabet, code));
            return true;
        },
        limits);
    report["codes"] = list;
    report["count"] = stats.emitted;
    report["nodes"] = stats.nodes;
    return Holds;
}

void print_text(const json& report, std::ostream& out)
{
    for (const auto& [key, value] : report.items()) {
        if (key == "schema" || key == "argv") continue;
        if (key == "dot") continue;
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    if (report.contains("dot")) out << report["dot"].get<std::string>();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Variable-length codes under edit relations", "edcodes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json_output, "Emit a JSON report");
    app.add_option("--max-nodes", opt.max_nodes, "Node budget for exhaustive searches");

    auto relation_opt = [&](CLI::App* sub) {
        sub->add_option("--relation", opt.relation, "Edit relation KIND:K, e.g. delta:1")->required();
    };
    auto file_opt = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Word-list file")->required(); };

    auto* check = app.add_subcommand("check", "Independence or closedness under an edit relation");
    file_opt(check);
    relation_opt(check);
    check->add_flag("--independent", opt.independent);
    check->add_flag("--closed", opt.closed);

    file_opt(app.add_subcommand("code", "Unique decipherability"));
    file_opt(app.add_subcommand("complete", "Completeness, with an external word when incomplete"));

    auto* measure = app.add_subcommand("measure", "Exact Bernoulli measure");
    file_opt(measure);
    measure->add_option("--dist", opt.dist, "uniform, or one weight per letter: 1/3,2/3");

    auto* orbit = app.add_subcommand("orbit", "Orbit of a word under iterated k-substitutions");
    orbit->add_option("word", opt.word)->required();
    orbit->add_option("--alphabet", opt.alphabet, "Symbols separated by spaces or commas");
    orbit->add_option("--k", opt.k)->required();
    orbit->add_flag("--expand", opt.expand, "List the orbit (at most 4096 words)");

    auto* complete_closed = app.add_subcommand("complete-closed", "Complete closed codes containing the input");
    file_opt(complete_closed);
    relation_opt(complete_closed);

    file_opt(app.add_subcommand("er-complete", "Embed a code into a complete code"));

    auto* extend = app.add_subcommand("extend", "Add one word keeping an independent code");
    file_opt(extend);
    relation_opt(extend);

    auto* no_closed = app.add_subcommand("no-closed", "Chain showing the input cannot be a closed code");
    file_opt(no_closed);
    relation_opt(no_closed);

    auto* classify = app.add_subcommand("classify", "Shape of a code closed under substitutions or edits");
    file_opt(classify);
    relation_opt(classify);

    file_opt(app.add_subcommand("margin", "Minimum edit distance minus one"));

    auto* enumerate = app.add_subcommand("enumerate-delta-closed", "All closed codes for exactly k deletions");
    enumerate->add_option("--alphabet", opt.alphabet);
    enumerate->add_option("--k", opt.k)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Holds : Usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json report;
    report["schema"] = 1;
    report["command"] = command;
    report["argv"] = args;

    const auto started = std::chrono::steady_clock::now();
    int code = Holds;
    try {
        if (command == "check") code = cmd_check(opt, report);
        else if (command == "code") code = cmd_code(opt, report);
        else if (command == "complete") code = cmd_complete(opt, report);
        else if (command == "measure") code = cmd_measure(opt, report);
        else if (command == "orbit") code = cmd_orbit(opt, report);
        else if (command == "complete-closed") code = cmd_complete_closed(opt, report);
        else if (command == "er-complete") code = cmd_er_complete(opt, report);
        else if (command == "extend") code = cmd_extend(opt, report);
        else if (command == "no-closed") code = cmd_no_closed(opt, report);
        else if (command == "classify") code = cmd_classify(opt, report);
        else if (command == "margin") code = cmd_margin(opt, report);
        else if (command == "enumerate-delta-closed") code = cmd_enumerate(opt, report);
    } catch (const GuardExceeded& e) {
        report["error"] = {{"kind", "guard"}, {"message", e.what()}, {"bound", e.bound()}};
        code = Guard;
    } catch (const PreconditionError& e) {
        report["error"] = {{"kind", "input"}, {"message", e.what()}};
        code = Usage;
    } catch (const VerificationFailure& e) {
        report["error"] = {{"kind", "internal"}, {"message", e.what()}};
        code = kInternalError;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    report["exit_code"] = code;
    report["elapsed_ms"] = elapsed.count();

    if (report.contains("error")) err << "error: " << report["error"]["message"].get<std::string>() << "\n";
    if (opt.json_output) {
        out << report.dump(2) << "\n";
    } else if (!report.contains("error")) {
        print_text(report, out);
    }
    return code;
}

} // namespace edcodes::cli
