#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "clir/encoding.hpp"

namespace clir::lexicon {

/// Classic Porter stemmer, steps 1a-5b of the reference algorithm.
/// Lowercases its input; words of length <= 2 come back unchanged.
std::string porter_stem(std::string_view token);

struct BilingualEntry {
    std::string headword;                   // lowercased English token
    std::vector<std::string> translations;  // deduplicated, order-preserving
};

enum class SourceEncoding { utf8, iscii };

/// English->Hindi dictionary. File rows: `english<TAB>hindi[|hindi...]`,
/// '#' comments. Duplicate headwords merge their translation lists.
class Dictionary {
public:
    static Dictionary load(const std::filesystem::path& file, SourceEncoding enc,
                           const encoding::CodecTable* codec = nullptr);
    static Dictionary from_stream(std::istream& in, SourceEncoding enc,
                                  const encoding::CodecTable* codec = nullptr);

    /// Exact lowercased lookup, then Porter-stem fallback.
    std::optional<std::vector<std::string>> lookup(std::string_view token) const;

    /// Exact lookup only, no stemming.
    const BilingualEntry* find(std::string_view headword) const;

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, BilingualEntry>& entries() const { return entries_; }

private:
    void add(const std::string& headword, std::string translation);

    std::map<std::string, BilingualEntry> entries_;
};

/// Exact-membership stopword list; one lowercased word per line, '#' comments.
class StopwordSet {
public:
    StopwordSet() = default;
    static StopwordSet load(const std::filesystem::path& file);
    static StopwordSet from_stream(std::istream& in);

    bool contains(std::string_view token) const;
    void insert(std::string_view word);
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

}  // namespace clir::lexicon
