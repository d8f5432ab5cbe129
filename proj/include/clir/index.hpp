#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clir/corpus.hpp"
#include "clir/lexicon.hpp"

namespace clir::index {

struct Posting {
    std::uint32_t doc = 0;  // ordinal, strictly increasing within a list
    std::uint32_t tf = 0;

    bool operator==(const Posting&) const = default;
};

struct ScoredDoc {
    std::string docno;
    double score = 0.0;
};

/// Retrieval result for one query: descending score, ties broken by
/// ascending docno, truncated to the cutoff. Zero-score documents are
/// never listed.
struct RankedList {
    std::string qid;
    std::vector<ScoredDoc> entries;
};

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
    std::size_t cutoff = 1000;
};

/// Term -> postings map with the collection statistics BM25 needs.
/// Immutable after build; concurrent scoring is safe.
class InvertedIndex {
public:
    static InvertedIndex build(std::span<const corpus::Document> docs,
                               const lexicon::StopwordSet& hindi_stopwords);

    RankedList score_bm25(const std::string& qid, std::span<const std::string> query_terms,
                          const Bm25Params& params) const;

    std::size_t doc_count() const { return doc_lengths_.size(); }
    double avg_doc_length() const;
    std::size_t vocab_size() const { return postings_.size(); }
    std::uint64_t total_tokens() const;
    std::size_t doc_frequency(const std::string& term) const;
    const std::string& docno(std::uint32_t ordinal) const { return docnos_.at(ordinal); }
    const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }
    const std::vector<std::uint32_t>& doc_lengths() const { return doc_lengths_; }

    /// Versioned binary format behind a magic header; load rejects
    /// anything it cannot reproduce bit-for-bit. Throws CorruptIndexFile.
    void save(const std::filesystem::path& file) const;
    static InvertedIndex load(const std::filesystem::path& file);

private:
    std::map<std::string, std::vector<Posting>> postings_;
    std::vector<std::uint32_t> doc_lengths_;
    std::vector<std::string> docnos_;
};

/// TREC run format: `qid Q0 docno rank score runtag`, rank from 1,
/// score with six decimals.
void write_trec_run(std::ostream& out, std::span<const RankedList> lists,
                    const std::string& runtag);

/// Reads a run file back, grouping by qid and ordering by the rank column.
std::map<std::string, RankedList> read_trec_run(std::istream& in);

}  // namespace clir::index
