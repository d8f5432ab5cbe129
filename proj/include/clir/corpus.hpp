#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clir::corpus {

struct Document {
    std::string docno;
    std::string text;

    bool operator==(const Document&) const = default;
};

struct Topic {
    std::string qid;
    std::string title;
    std::string description;
    std::string narrative;
};

/// Relevance judgments. Grade >= 1 means relevant, 0 judged nonrelevant.
class Qrels {
public:
    void add(const std::string& qid, const std::string& docno, int grade);

    bool has_query(const std::string& qid) const;
    bool is_relevant(const std::string& qid, const std::string& docno) const;
    int grade(const std::string& qid, const std::string& docno) const;
    std::size_t relevant_count(const std::string& qid) const;
    std::size_t query_count() const { return by_query_.size(); }

    /// Whitespace-separated `qid iter docno rel` lines; iter ignored.
    /// Throws MalformedLine / DuplicateJudgment.
    static Qrels parse(std::istream& in);
    static Qrels parse_file(const std::filesystem::path& file);

private:
    std::map<std::string, std::map<std::string, int>> by_query_;
};

/// Lenient TREC-style <DOC> record scanner. Tag-driven, tolerates
/// unescaped entities; markup inside <TEXT> is stripped and whitespace
/// normalized. Throws MissingDocno / UnterminatedRecord.
std::vector<Document> parse_documents(std::istream& in);
std::vector<Document> parse_documents_file(const std::filesystem::path& file);

/// Inverse of parse_documents for fixture generation.
void serialize_documents(std::ostream& out, std::span<const Document> docs);

/// <top> records with <num>, <title>, optional <desc>/<narr>. Closing tags
/// optional, TREC-classic style. The qid keeps only the digits when the
/// num field carries a "Number:" style prefix. Throws MissingTitle.
std::vector<Topic> parse_topics(std::istream& in);
std::vector<Topic> parse_topics_file(const std::filesystem::path& file);

/// Splits on anything that is not a Latin alphanumeric or Devanagari
/// scalar. Latin is lowercased, Devanagari kept intact; dependent signs
/// never open a token and ZWJ/ZWNJ are dropped without splitting.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace clir::corpus
