#include "clir/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "clir/errors.hpp"

namespace clir::lexicon {

namespace {

std::string lowercase_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

void Dictionary::add(const std::string& headword, std::string translation) {
    BilingualEntry& entry = entries_[headword];
    entry.headword = headword;
    if (std::find(entry.translations.begin(), entry.translations.end(), translation) ==
        entry.translations.end())
        entry.translations.push_back(std::move(translation));
}

Dictionary Dictionary::load(const std::filesystem::path& file, SourceEncoding enc,
                            const encoding::CodecTable* codec) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error("cannot open dictionary " + file.string());
    return from_stream(in, enc, codec);
}

Dictionary Dictionary::from_stream(std::istream& in, SourceEncoding enc,
                                   const encoding::CodecTable* codec) {
    if (enc == SourceEncoding::iscii && codec == nullptr)
        throw Error("ISCII dictionary needs a codec table");

    Dictionary dict;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw MalformedLine(lineno, "expected english<TAB>hindi[|hindi...]");
        std::string headword = lowercase_ascii(line.substr(0, tab));
        std::string hindi_field = line.substr(tab + 1);
        if (enc == SourceEncoding::iscii) {
            try {
                hindi_field = codec->decode(hindi_field);
            } catch (const UnassignedByte& e) {
                throw UnassignedByte(e.position, e.byte,
                                     "line " + std::to_string(lineno) + ": ");
            }
        }
        if (hindi_field.empty()) throw MalformedLine(lineno, "empty translation list");
        std::size_t start = 0;
        while (start <= hindi_field.size()) {
            std::size_t bar = hindi_field.find('|', start);
            std::string translation = hindi_field.substr(
                start, bar == std::string::npos ? std::string::npos : bar - start);
            if (!translation.empty()) dict.add(headword, std::move(translation));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
    }
    return dict;
}

const BilingualEntry* Dictionary::find(std::string_view headword) const {
    auto it = entries_.find(lowercase_ascii(headword));
    return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::vector<std::string>> Dictionary::lookup(std::string_view token) const {
    std::string lower = lowercase_ascii(token);
    if (const BilingualEntry* hit = find(lower)) return hit->translations;
    std::string stem = porter_stem(lower);
    if (stem != lower) {
        if (const BilingualEntry* hit = find(stem)) return hit->translations;
    }
    return std::nullopt;
}

StopwordSet StopwordSet::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open stopword file " + file.string());
    return from_stream(in);
}

StopwordSet StopwordSet::from_stream(std::istream& in) {
    StopwordSet set;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        set.insert(line);
    }
    return set;
}

bool StopwordSet::contains(std::string_view token) const {
    if (token.empty()) return false;
    return words_.count(lowercase_ascii(token)) > 0;
}

void StopwordSet::insert(std::string_view word) {
    words_.insert(lowercase_ascii(word));
}

}  // namespace clir::lexicon
