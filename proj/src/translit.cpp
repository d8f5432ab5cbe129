#include "clir/translit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "clir/errors.hpp"

namespace clir::translit {

namespace {

constexpr std::string_view kHalant = "्";

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

std::string lowercase_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

ItransScheme ItransScheme::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open scheme file " + file.string());
    return from_stream(in);
}

ItransScheme ItransScheme::from_stream(std::istream& in) {
    ItransScheme scheme;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() != 3) throw MalformedLine(lineno, "expected token<TAB>target<TAB>class");
        const std::string& roman = fields[0];
        const std::string& target = fields[1];
        const std::string& cls = fields[2];
        if (roman.empty()) throw MalformedLine(lineno, "empty token");

        Token& tok = scheme.tokens_[roman];
        tok.roman = roman;
        if (cls == "consonant") {
            if (tok.is_consonant) throw MalformedLine(lineno, "duplicate consonant row");
            tok.consonant = target;
            tok.is_consonant = true;
        } else if (cls == "vowel_i") {
            tok.vowel_indep = target;
            tok.is_vowel = true;
        } else if (cls == "vowel_d") {
            tok.vowel_matra = target;
            tok.is_vowel = true;
        } else if (cls == "special") {
            if (tok.is_special) throw MalformedLine(lineno, "duplicate special row");
            tok.special = target;
            tok.is_special = true;
        } else {
            throw MalformedLine(lineno, "unknown class '" + cls + "'");
        }
        if (int(tok.is_consonant) + int(tok.is_vowel) + int(tok.is_special) > 1)
            throw MalformedLine(lineno, "token '" + roman + "' spans classes");
        scheme.max_token_length_ = std::max(scheme.max_token_length_, roman.size());
    }
    return scheme;
}

const ItransScheme::Token* ItransScheme::match_at(std::string_view input, std::size_t pos,
                                                  std::size_t* length) const {
    std::size_t longest = std::min(max_token_length_, input.size() - pos);
    for (std::size_t len = longest; len >= 1; --len) {
        auto it = tokens_.find(std::string(input.substr(pos, len)));
        if (it != tokens_.end()) {
            *length = len;
            return &it->second;
        }
    }
    return nullptr;
}

std::string ItransScheme::parse(std::string_view roman) const {
    std::string out;
    const std::string* pending = nullptr;  // consonant awaiting its vowel

    auto flush = [&] {
        if (pending) {
            out += *pending;  // inherent vowel: letter alone
            pending = nullptr;
        }
    };

    std::size_t pos = 0;
    while (pos < roman.size()) {
        if (roman[pos] == ' ') {
            flush();
            out += ' ';
            ++pos;
            continue;
        }
        std::size_t len = 0;
        const Token* tok = match_at(roman, pos, &len);
        if (!tok) throw UntokenizableInput(pos);
        if (tok->is_consonant) {
            if (pending) {
                out += *pending;
                out += kHalant;
            }
            pending = &tok->consonant;
        } else if (tok->is_vowel) {
            if (pending) {
                out += *pending;
                out += tok->vowel_matra;
                pending = nullptr;
            } else {
                out += tok->vowel_indep;
            }
        } else {
            flush();
            out += tok->special;
        }
        pos += len;
    }
    flush();
    return out;
}

std::vector<ItransScheme::Token> ItransScheme::tokens() const {
    std::vector<Token> all;
    all.reserve(tokens_.size());
    for (const auto& [roman, tok] : tokens_) all.push_back(tok);
    std::sort(all.begin(), all.end(),
              [](const Token& a, const Token& b) { return a.roman < b.roman; });
    return all;
}

RespellRules RespellRules::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open respell file " + file.string());
    return from_stream(in);
}

RespellRules RespellRules::from_stream(std::istream& in) {
    RespellRules rules;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (line[0] == '!') {
            if (fields.size() != 2) throw MalformedLine(lineno, "expected !word<TAB>replacement");
            rules.exceptions_[lowercase_ascii(fields[0].substr(1))] = fields[1];
            continue;
        }
        if (fields.size() != 3)
            throw MalformedLine(lineno, "expected pattern<TAB>context<TAB>replacement");
        Rule rule;
        rule.pattern = fields[0];
        if (rule.pattern.empty()) throw MalformedLine(lineno, "empty pattern");
        if (fields[1] == "any") rule.context = Context::any;
        else if (fields[1] == "start") rule.context = Context::start;
        else if (fields[1] == "end") rule.context = Context::end;
        else throw MalformedLine(lineno, "unknown context '" + fields[1] + "'");
        rule.replacement = fields[2];
        rules.rules_.push_back(std::move(rule));
    }
    return rules;
}

std::string RespellRules::respell(std::string_view word) const {
    std::string lower = lowercase_ascii(word);
    if (auto it = exceptions_.find(lower); it != exceptions_.end()) return it->second;

    std::string out;
    std::size_t pos = 0;
    while (pos < lower.size()) {
        const Rule* hit = nullptr;
        for (const Rule& rule : rules_) {
            if (rule.pattern.size() > lower.size() - pos) continue;
            if (lower.compare(pos, rule.pattern.size(), rule.pattern) != 0) continue;
            if (rule.context == Context::start && pos != 0) continue;
            if (rule.context == Context::end) {
                if (pos + rule.pattern.size() != lower.size()) continue;
                if (pos == 0) continue;  // suffix rules need a stem before them
            }
            hit = &rule;
            break;
        }
        if (hit) {
            out += hit->replacement;
            pos += hit->pattern.size();
        } else {
            out += lower[pos];
            ++pos;
        }
    }
    return out;
}

std::string Transliterator::transliterate(std::string_view english_word) const {
    return scheme_.parse(rules_.respell(english_word));
}

}  // namespace clir::translit
