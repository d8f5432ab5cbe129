#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "clir/corpus.hpp"
#include "clir/index.hpp"
#include "clir/lexicon.hpp"
#include "clir/querypipe.hpp"
#include "clir/translit.hpp"

namespace clir::eval {

inline constexpr std::array<std::size_t, 9> kPrecisionCutoffs = {5,   10,  15,  20, 30,
                                                                 100, 200, 500, 1000};

/// The full metric battery for one run.
struct EvalReport {
    std::size_t num_queries = 0;
    std::size_t num_retrieved = 0;
    std::size_t num_relevant = 0;
    std::size_t num_relevant_retrieved = 0;
    double map = 0.0;
    std::array<double, 11> interp_pr{};          // recall 0.0, 0.1, ..., 1.0
    std::map<std::size_t, double> precision_at;  // kPrecisionCutoffs
    double r_precision = 0.0;
};

/// AP = (1/R) * sum of precision at each relevant hit; topics whose qrels
/// hold no relevant document score 0.
double average_precision(const index::RankedList& ranked, const corpus::Qrels& qrels,
                         const std::string& qid);

/// Standard 11-point interpolation: max precision over all cut points with
/// recall >= the level.
std::array<double, 11> interpolated_precision(const index::RankedList& ranked,
                                              const corpus::Qrels& qrels, const std::string& qid);

/// Aggregates a whole run; every run qid must be judged (UnjudgedQuery).
EvalReport evaluate_run(const std::map<std::string, index::RankedList>& run,
                        const corpus::Qrels& qrels);

enum class SelectionPolicy {
    oracle,      // argmax average precision against the qrels
    score_mass,  // argmax sum of retrieval scores; needs no judgments
};

struct SelectionOutcome {
    std::string qid;
    std::vector<std::uint8_t> chosen_mask;
    double chosen_ap = 0.0;
    double baseline_ap = 0.0;
    std::size_t num_candidates = 0;
    index::RankedList chosen_ranking;
};

/// Retrieval shared by selection and final evaluation: Hindi stopwords are
/// filtered from the query, mirroring indexing.
index::RankedList retrieve(const index::InvertedIndex& idx, const std::string& qid,
                           std::span<const std::string> terms,
                           const lexicon::StopwordSet& hindi_stopwords,
                           const index::Bm25Params& params);

/// Runs every candidate and keeps the best. Ties favor the lowest mask
/// value, so the baseline wins when nothing beats it. Under the oracle
/// policy chosen_ap >= baseline_ap always holds; score_mass is a
/// judgment-free alternative without that guarantee.
SelectionOutcome select_best_candidate(std::span<const querypipe::QueryCandidate> candidates,
                                       const index::InvertedIndex& idx,
                                       const corpus::Qrels& qrels,
                                       const lexicon::StopwordSet& hindi_stopwords,
                                       const index::Bm25Params& params,
                                       SelectionPolicy policy = SelectionPolicy::oracle);

enum class Mode { eht, ehrt };

struct ExperimentOptions {
    index::Bm25Params ranker;
    std::size_t candidate_cap = std::size_t{1} << 16;
    SelectionPolicy policy = SelectionPolicy::oracle;
    unsigned threads = 1;
};

struct ExperimentResult {
    std::map<std::string, index::RankedList> run;
    EvalReport report;
    std::vector<SelectionOutcome> selections;  // ehrt only
    std::vector<std::string> warnings;         // skipped topics, dropped terms
};

/// One full retrieval run over a topic set. eht retrieves with the
/// translated title; ehrt generates all variant combinations per topic and
/// retrieves with the selected one. Per-topic failures become warnings and
/// the topic is skipped.
ExperimentResult run_experiment(std::span<const corpus::Topic> topics,
                                const index::InvertedIndex& idx,
                                const lexicon::Dictionary& dictionary,
                                const lexicon::StopwordSet& english_stopwords,
                                const lexicon::StopwordSet& hindi_stopwords,
                                const translit::Transliterator& transliterator,
                                const corpus::Qrels& qrels, Mode mode,
                                const ExperimentOptions& options);

/// Plain-text metric table; one value column per labeled report.
void write_report_text(std::ostream& out,
                       std::span<const std::pair<std::string, const EvalReport*>> columns);

/// Machine-readable `metric,value` rows.
void write_report_csv(std::ostream& out, const EvalReport& report);

}  // namespace clir::eval
