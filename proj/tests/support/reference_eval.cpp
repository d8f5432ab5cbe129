#include "reference_eval.hpp"

#include <algorithm>

namespace clir_test {

namespace {

// precision after the top `depth` entries, recounted from scratch
double precision_at_depth(const clir::index::RankedList& ranked,
                          const clir::corpus::Qrels& qrels, const std::string& qid,
                          std::size_t depth) {
    std::size_t relevant = 0;
    for (std::size_t i = 0; i < ranked.entries.size() && i < depth; ++i)
        if (qrels.grade(qid, ranked.entries[i].docno) >= 1) ++relevant;
    return static_cast<double>(relevant) / static_cast<double>(depth);
}

std::size_t relevant_in_list(const clir::index::RankedList& ranked,
                             const clir::corpus::Qrels& qrels, const std::string& qid) {
    std::size_t n = 0;
    for (const auto& entry : ranked.entries)
        if (qrels.grade(qid, entry.docno) >= 1) ++n;
    return n;
}

}  // namespace

double reference_average_precision(const clir::index::RankedList& ranked,
                                   const clir::corpus::Qrels& qrels, const std::string& qid) {
    const std::size_t total_relevant = qrels.relevant_count(qid);
    if (total_relevant == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t rank = 1; rank <= ranked.entries.size(); ++rank) {
        if (qrels.grade(qid, ranked.entries[rank - 1].docno) >= 1)
            sum += precision_at_depth(ranked, qrels, qid, rank);
    }
    return sum / static_cast<double>(total_relevant);
}

std::array<double, 11> reference_interpolated_precision(const clir::index::RankedList& ranked,
                                                        const clir::corpus::Qrels& qrels,
                                                        const std::string& qid) {
    std::array<double, 11> interp{};
    const std::size_t total_relevant = qrels.relevant_count(qid);
    if (total_relevant == 0) return interp;
    for (int level = 0; level <= 10; ++level) {
        const double want_recall = level / 10.0;
        double best = 0.0;
        for (std::size_t rank = 1; rank <= ranked.entries.size(); ++rank) {
            std::size_t relevant_so_far = 0;
            for (std::size_t i = 0; i < rank; ++i)
                if (qrels.grade(qid, ranked.entries[i].docno) >= 1) ++relevant_so_far;
            const double recall =
                static_cast<double>(relevant_so_far) / static_cast<double>(total_relevant);
            if (qrels.grade(qid, ranked.entries[rank - 1].docno) >= 1 && recall >= want_recall)
                best = std::max(best,
                                static_cast<double>(relevant_so_far) / static_cast<double>(rank));
        }
        interp[level] = best;
    }
    return interp;
}

ReferenceReport reference_evaluate(const std::map<std::string, clir::index::RankedList>& run,
                                   const clir::corpus::Qrels& qrels) {
    ReferenceReport report;
    report.num_queries = run.size();
    const std::size_t cutoffs[] = {5, 10, 15, 20, 30, 100, 200, 500, 1000};
    for (std::size_t c : cutoffs) report.precision_at[c] = 0.0;
    if (run.empty()) return report;

    for (const auto& [qid, ranked] : run) {
        report.num_retrieved += ranked.entries.size();
        report.num_relevant += qrels.relevant_count(qid);
        report.num_relevant_retrieved += relevant_in_list(ranked, qrels, qid);
        report.map += reference_average_precision(ranked, qrels, qid);
        auto interp = reference_interpolated_precision(ranked, qrels, qid);
        for (int level = 0; level <= 10; ++level) report.interp_pr[level] += interp[level];
        for (std::size_t c : cutoffs) report.precision_at[c] += precision_at_depth(ranked, qrels, qid, c);
        const std::size_t r = qrels.relevant_count(qid);
        if (r > 0) report.r_precision += precision_at_depth(ranked, qrels, qid, r);
    }
    const double n = static_cast<double>(run.size());
    report.map /= n;
    report.r_precision /= n;
    for (int level = 0; level <= 10; ++level) report.interp_pr[level] /= n;
    for (auto& [c, value] : report.precision_at) value /= n;
    return report;
}

}  // namespace clir_test
