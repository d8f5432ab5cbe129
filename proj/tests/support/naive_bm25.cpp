#include "naive_bm25.hpp"

#include <algorithm>
#include <cmath>

namespace clir_test {

clir::index::RankedList naive_bm25(std::span<const clir::corpus::Document> docs,
                                   const clir::lexicon::StopwordSet& hindi_stopwords,
                                   const std::string& qid,
                                   std::span<const std::string> query_terms,
                                   const clir::index::Bm25Params& params) {
    clir::index::RankedList result;
    result.qid = qid;
    if (docs.empty() || query_terms.empty()) return result;

    std::vector<std::vector<std::string>> tokenized;
    tokenized.reserve(docs.size());
    for (const auto& doc : docs) {
        std::vector<std::string> kept;
        for (auto& token : clir::corpus::tokenize(doc.text))
            if (!hindi_stopwords.contains(token)) kept.push_back(std::move(token));
        tokenized.push_back(std::move(kept));
    }

    double total_len = 0.0;
    for (const auto& tokens : tokenized) total_len += static_cast<double>(tokens.size());
    const double avgdl = total_len / static_cast<double>(docs.size());
    if (avgdl == 0.0) return result;
    const double n_docs = static_cast<double>(docs.size());

    for (std::size_t d = 0; d < docs.size(); ++d) {
        double score = 0.0;
        const double dl = static_cast<double>(tokenized[d].size());
        for (const std::string& term : query_terms) {
            std::size_t df = 0;
            for (const auto& tokens : tokenized)
                if (std::count(tokens.begin(), tokens.end(), term) > 0) ++df;
            const auto tf = static_cast<double>(
                std::count(tokenized[d].begin(), tokenized[d].end(), term));
            if (tf == 0.0) continue;
            const double idf =
                std::log((n_docs - static_cast<double>(df) + 0.5) /
                             (static_cast<double>(df) + 0.5) +
                         1.0);
            score += idf * (tf * (params.k1 + 1.0)) /
                     (tf + params.k1 * (1.0 - params.b + params.b * dl / avgdl));
        }
        if (score > 0.0) result.entries.push_back({docs[d].docno, score});
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const clir::index::ScoredDoc& a, const clir::index::ScoredDoc& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.docno < b.docno;
              });
    if (result.entries.size() > params.cutoff) result.entries.resize(params.cutoff);
    return result;
}

}  // namespace clir_test
