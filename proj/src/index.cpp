#include "clir/index.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "clir/errors.hpp"

namespace clir::index {

namespace {

constexpr char kMagic[8] = {'C', 'L', 'I', 'R', 'I', 'X', '0', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
    char buf[4];
    for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, 8);
}

void put_string(std::ostream& out, const std::string& s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& in) {
    char buf[4];
    if (!in.read(buf, 4)) throw CorruptIndexFile("truncated while reading u32");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    char buf[8];
    if (!in.read(buf, 8)) throw CorruptIndexFile("truncated while reading u64");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return v;
}

std::string get_string(std::istream& in) {
    std::uint32_t len = get_u32(in);
    std::string s(len, '\0');
    if (len && !in.read(s.data(), len)) throw CorruptIndexFile("truncated while reading string");
    return s;
}

}  // namespace

InvertedIndex InvertedIndex::build(std::span<const corpus::Document> docs,
                                   const lexicon::StopwordSet& hindi_stopwords) {
    InvertedIndex idx;
    std::unordered_set<std::string> seen;
    seen.reserve(docs.size());
    for (const corpus::Document& doc : docs) {
        if (!seen.insert(doc.docno).second) throw DuplicateDocno(doc.docno);
        auto ordinal = static_cast<std::uint32_t>(idx.docnos_.size());
        idx.docnos_.push_back(doc.docno);

        std::uint32_t length = 0;
        std::unordered_map<std::string, std::uint32_t> tf;
        for (std::string& token : corpus::tokenize(doc.text)) {
            if (hindi_stopwords.contains(token)) continue;
            ++tf[token];
            ++length;
        }
        idx.doc_lengths_.push_back(length);
        for (auto& [term, count] : tf) idx.postings_[term].push_back({ordinal, count});
    }
    // Postings were appended in ascending ordinal order already; keep the
    // invariant explicit for loaded/merged data paths.
    for (auto& [term, list] : idx.postings_)
        std::sort(list.begin(), list.end(),
                  [](const Posting& a, const Posting& b) { return a.doc < b.doc; });
    return idx;
}

double InvertedIndex::avg_doc_length() const {
    if (doc_lengths_.empty()) return 0.0;
    std::uint64_t total = 0;
    for (std::uint32_t len : doc_lengths_) total += len;
    return static_cast<double>(total) / static_cast<double>(doc_lengths_.size());
}

std::uint64_t InvertedIndex::total_tokens() const {
    std::uint64_t total = 0;
    for (std::uint32_t len : doc_lengths_) total += len;
    return total;
}

std::size_t InvertedIndex::doc_frequency(const std::string& term) const {
    auto it = postings_.find(term);
    return it == postings_.end() ? 0 : it->second.size();
}

RankedList InvertedIndex::score_bm25(const std::string& qid,
                                     std::span<const std::string> query_terms,
                                     const Bm25Params& params) const {
    RankedList result;
    result.qid = qid;
    if (query_terms.empty() || doc_lengths_.empty()) return result;

    const double n_docs = static_cast<double>(doc_count());
    const double avgdl = avg_doc_length();
    if (avgdl == 0.0) return result;

    std::unordered_map<std::uint32_t, double> scores;
    for (const std::string& term : query_terms) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        const auto& list = it->second;
        const double df = static_cast<double>(list.size());
        const double idf = std::log((n_docs - df + 0.5) / (df + 0.5) + 1.0);
        for (const Posting& p : list) {
            const double tf = static_cast<double>(p.tf);
            const double dl = static_cast<double>(doc_lengths_[p.doc]);
            const double norm = params.k1 * (1.0 - params.b + params.b * dl / avgdl);
            scores[p.doc] += idf * (tf * (params.k1 + 1.0)) / (tf + norm);
        }
    }

    result.entries.reserve(scores.size());
    for (const auto& [doc, score] : scores)
        if (score > 0.0) result.entries.push_back({docnos_[doc], score});
    std::sort(result.entries.begin(), result.entries.end(),
              [](const ScoredDoc& a, const ScoredDoc& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.docno < b.docno;
              });
    if (result.entries.size() > params.cutoff) result.entries.resize(params.cutoff);
    return result;
}

void InvertedIndex::save(const std::filesystem::path& file) const {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write index file " + file.string());
    out.write(kMagic, sizeof(kMagic));
    put_u32(out, static_cast<std::uint32_t>(docnos_.size()));
    for (std::size_t i = 0; i < docnos_.size(); ++i) {
        put_string(out, docnos_[i]);
        put_u32(out, doc_lengths_[i]);
    }
    put_u64(out, postings_.size());
    for (const auto& [term, list] : postings_) {
        put_string(out, term);
        put_u32(out, static_cast<std::uint32_t>(list.size()));
        for (const Posting& p : list) {
            put_u32(out, p.doc);
            put_u32(out, p.tf);
        }
    }
    if (!out) throw Error("short write to index file " + file.string());
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw CorruptIndexFile("cannot open " + file.string());
    char magic[8];
    if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kMagic))
        throw CorruptIndexFile("bad magic or unsupported version");

    InvertedIndex idx;
    std::uint32_t n_docs = get_u32(in);
    idx.docnos_.reserve(n_docs);
    idx.doc_lengths_.reserve(n_docs);
    for (std::uint32_t i = 0; i < n_docs; ++i) {
        idx.docnos_.push_back(get_string(in));
        idx.doc_lengths_.push_back(get_u32(in));
    }
    std::uint64_t n_terms = get_u64(in);
    for (std::uint64_t t = 0; t < n_terms; ++t) {
        std::string term = get_string(in);
        std::uint32_t n_postings = get_u32(in);
        std::vector<Posting> list;
        list.reserve(n_postings);
        std::uint32_t prev_doc = 0;
        for (std::uint32_t p = 0; p < n_postings; ++p) {
            Posting posting{get_u32(in), get_u32(in)};
            if (posting.doc >= n_docs)
                throw CorruptIndexFile("posting references document " +
                                       std::to_string(posting.doc) + " of " +
                                       std::to_string(n_docs));
            if (p > 0 && posting.doc <= prev_doc)
                throw CorruptIndexFile("postings for '" + term + "' are not increasing");
            prev_doc = posting.doc;
            list.push_back(posting);
        }
        idx.postings_.emplace(std::move(term), std::move(list));
    }
    in.peek();
    if (!in.eof()) throw CorruptIndexFile("trailing bytes after postings");
    return idx;
}

void write_trec_run(std::ostream& out, std::span<const RankedList> lists,
                    const std::string& runtag) {
    char score_buf[32];
    for (const RankedList& list : lists) {
        std::size_t rank = 1;
        for (const ScoredDoc& entry : list.entries) {
            std::snprintf(score_buf, sizeof(score_buf), "%.6f", entry.score);
            out << list.qid << " Q0 " << entry.docno << ' ' << rank << ' ' << score_buf << ' '
                << runtag << '\n';
            ++rank;
        }
    }
}

std::map<std::string, RankedList> read_trec_run(std::istream& in) {
    std::map<std::string, std::vector<std::pair<std::size_t, ScoredDoc>>> grouped;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string qid, q0, docno, runtag;
        std::size_t rank;
        double score;
        if (!(fields >> qid >> q0 >> docno >> rank >> score >> runtag))
            throw MalformedLine(lineno, "expected `qid Q0 docno rank score runtag`");
        grouped[qid].emplace_back(rank, ScoredDoc{docno, score});
    }
    std::map<std::string, RankedList> run;
    for (auto& [qid, entries] : grouped) {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        RankedList list;
        list.qid = qid;
        for (auto& [rank, doc] : entries) list.entries.push_back(std::move(doc));
        run.emplace(qid, std::move(list));
    }
    return run;
}

}  // namespace clir::index
