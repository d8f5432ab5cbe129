#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clir::translit {

/// Roman-to-Devanagari scheme in the ITRANS tradition, loaded from a data
/// file of `token<TAB>target<TAB>class` rows, class one of consonant,
/// vowel_i (independent form), vowel_d (matra form), special. A vowel token
/// appears twice, once per form; the inherent vowel's matra row has an
/// empty target.
class ItransScheme {
public:
    static ItransScheme load(const std::filesystem::path& file);
    static ItransScheme from_stream(std::istream& in);

    /// Greedy longest-match parse. Consonant + vowel composes via matra,
    /// consonant + consonant via halant, and a token-final consonant keeps
    /// its inherent vowel. Spaces pass through. Throws UntokenizableInput.
    std::string parse(std::string_view roman) const;

    struct Token {
        std::string roman;
        std::string consonant;    // set when the token is a consonant
        std::string vowel_indep;  // independent vowel form
        std::string vowel_matra;  // matra form ("" is valid: inherent vowel)
        std::string special;      // sign appended after flushing
        bool is_consonant = false;
        bool is_vowel = false;
        bool is_special = false;
    };

    /// All tokens, for scheme audits and reference parsers in tests.
    std::vector<Token> tokens() const;

    std::size_t max_token_length() const { return max_token_length_; }

private:
    const Token* match_at(std::string_view input, std::size_t pos, std::size_t* length) const;

    std::unordered_map<std::string, Token> tokens_;
    std::size_t max_token_length_ = 0;
};

/// English-orthography respelling: lowercases a word and rewrites it into
/// scheme input, so loanwords land on their conventional Devanagari
/// renderings. Data file rows are `pattern<TAB>context<TAB>replacement`
/// (context: any | start | end) applied first-match in file order, one
/// left-to-right pass, plus `!word<TAB>replacement` whole-word exceptions
/// that bypass the rules entirely. An `end` pattern does not match when it
/// would also be the start of the word, so single letters fall through
/// unchanged. Characters no rule covers pass through lowercased.
class RespellRules {
public:
    static RespellRules load(const std::filesystem::path& file);
    static RespellRules from_stream(std::istream& in);

    std::string respell(std::string_view word) const;

    std::size_t rule_count() const { return rules_.size(); }
    std::size_t exception_count() const { return exceptions_.size(); }

private:
    enum class Context { any, start, end };
    struct Rule {
        std::string pattern;
        Context context;
        std::string replacement;
    };
    std::vector<Rule> rules_;
    std::unordered_map<std::string, std::string> exceptions_;
};

/// respell + parse. The full English-term transliteration path.
class Transliterator {
public:
    Transliterator(ItransScheme scheme, RespellRules rules)
        : scheme_(std::move(scheme)), rules_(std::move(rules)) {}

    /// Throws UntokenizableInput when the respelled form leaves scheme input.
    std::string transliterate(std::string_view english_word) const;

    const ItransScheme& scheme() const { return scheme_; }
    const RespellRules& rules() const { return rules_; }

private:
    ItransScheme scheme_;
    RespellRules rules_;
};

}  // namespace clir::translit
