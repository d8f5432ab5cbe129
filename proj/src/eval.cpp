#include "clir/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <optional>
#include <thread>

#include "clir/errors.hpp"

namespace clir::eval {

double average_precision(const index::RankedList& ranked, const corpus::Qrels& qrels,
                         const std::string& qid) {
    const std::size_t total_relevant = qrels.relevant_count(qid);
    if (total_relevant == 0) return 0.0;
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
        if (qrels.is_relevant(qid, ranked.entries[i].docno)) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(total_relevant);
}

std::array<double, 11> interpolated_precision(const index::RankedList& ranked,
                                              const corpus::Qrels& qrels,
                                              const std::string& qid) {
    std::array<double, 11> interp{};
    const std::size_t total_relevant = qrels.relevant_count(qid);
    if (total_relevant == 0) return interp;

    // precision/recall at each relevant hit
    std::vector<std::pair<double, double>> points;  // (recall, precision)
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
        if (qrels.is_relevant(qid, ranked.entries[i].docno)) {
            ++hits;
            points.emplace_back(static_cast<double>(hits) / static_cast<double>(total_relevant),
                                static_cast<double>(hits) / static_cast<double>(i + 1));
        }
    }
    for (std::size_t level = 0; level < 11; ++level) {
        const double recall = static_cast<double>(level) / 10.0;
        double best = 0.0;
        for (const auto& [r, p] : points)
            if (r >= recall - 1e-12) best = std::max(best, p);
        interp[level] = best;
    }
    return interp;
}

EvalReport evaluate_run(const std::map<std::string, index::RankedList>& run,
                        const corpus::Qrels& qrels) {
    EvalReport report;
    report.num_queries = run.size();
    for (std::size_t cutoff : kPrecisionCutoffs) report.precision_at[cutoff] = 0.0;
    if (run.empty()) return report;

    for (const auto& [qid, ranked] : run) {
        if (!qrels.has_query(qid)) throw UnjudgedQuery(qid);
        const std::size_t total_relevant = qrels.relevant_count(qid);

        report.num_retrieved += ranked.entries.size();
        report.num_relevant += total_relevant;

        std::size_t hits = 0;
        std::size_t hits_at_r = 0;
        std::map<std::size_t, std::size_t> hits_at_cutoff;
        for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
            if (qrels.is_relevant(qid, ranked.entries[i].docno)) {
                ++hits;
                if (i + 1 <= total_relevant) ++hits_at_r;
                for (std::size_t cutoff : kPrecisionCutoffs)
                    if (i + 1 <= cutoff) ++hits_at_cutoff[cutoff];
            }
        }
        report.num_relevant_retrieved += hits;
        report.map += average_precision(ranked, qrels, qid);
        if (total_relevant > 0)
            report.r_precision +=
                static_cast<double>(hits_at_r) / static_cast<double>(total_relevant);
        for (std::size_t cutoff : kPrecisionCutoffs)
            report.precision_at[cutoff] +=
                static_cast<double>(hits_at_cutoff[cutoff]) / static_cast<double>(cutoff);

        const auto interp = interpolated_precision(ranked, qrels, qid);
        for (std::size_t level = 0; level < 11; ++level) report.interp_pr[level] += interp[level];
    }

    const double n = static_cast<double>(report.num_queries);
    report.map /= n;
    report.r_precision /= n;
    for (std::size_t cutoff : kPrecisionCutoffs) report.precision_at[cutoff] /= n;
    for (std::size_t level = 0; level < 11; ++level) report.interp_pr[level] /= n;
    return report;
}

index::RankedList retrieve(const index::InvertedIndex& idx, const std::string& qid,
                           std::span<const std::string> terms,
                           const lexicon::StopwordSet& hindi_stopwords,
                           const index::Bm25Params& params) {
    std::vector<std::string> kept;
    kept.reserve(terms.size());
    for (const std::string& term : terms)
        if (!hindi_stopwords.contains(term)) kept.push_back(term);
    return idx.score_bm25(qid, kept, params);
}

SelectionOutcome select_best_candidate(std::span<const querypipe::QueryCandidate> candidates,
                                       const index::InvertedIndex& idx,
                                       const corpus::Qrels& qrels,
                                       const lexicon::StopwordSet& hindi_stopwords,
                                       const index::Bm25Params& params, SelectionPolicy policy) {
    if (candidates.empty()) throw std::invalid_argument("select_best_candidate: no candidates");
    const std::string& qid = candidates.front().qid;
    if (policy == SelectionPolicy::oracle && !qrels.has_query(qid)) throw UnjudgedQuery(qid);

    SelectionOutcome outcome;
    outcome.qid = qid;
    outcome.num_candidates = candidates.size();

    double best_value = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        index::RankedList ranked = retrieve(idx, qid, candidates[i].terms, hindi_stopwords,
                                            params);
        const double ap = average_precision(ranked, qrels, qid);
        double value = ap;
        if (policy == SelectionPolicy::score_mass) {
            value = 0.0;
            for (const auto& entry : ranked.entries) value += entry.score;
        }
        if (i == 0) outcome.baseline_ap = ap;  // candidates start at the baseline mask
        if (value > best_value) {
            best_value = value;
            outcome.chosen_mask = candidates[i].choice_mask;
            outcome.chosen_ap = ap;
            outcome.chosen_ranking = std::move(ranked);
        }
    }
    return outcome;
}

namespace {

struct TopicOutcome {
    std::string qid;
    std::optional<index::RankedList> ranking;
    std::optional<SelectionOutcome> selection;
    std::vector<std::string> warnings;
};

TopicOutcome process_topic(const corpus::Topic& topic, const index::InvertedIndex& idx,
                           const lexicon::Dictionary& dictionary,
                           const lexicon::StopwordSet& english_stopwords,
                           const lexicon::StopwordSet& hindi_stopwords,
                           const translit::Transliterator& transliterator,
                           const corpus::Qrels& qrels, Mode mode,
                           const ExperimentOptions& options) {
    TopicOutcome outcome;
    outcome.qid = topic.qid;
    try {
        if (!qrels.has_query(topic.qid)) throw UnjudgedQuery(topic.qid);
        auto terms = querypipe::extract_content_terms(topic.title, english_stopwords);
        auto build = querypipe::build_slots(terms, dictionary, transliterator);
        for (const std::string& dropped : build.dropped)
            outcome.warnings.push_back("topic " + topic.qid + ": term '" + dropped +
                                       "' has no translation or transliteration");
        if (mode == Mode::eht) {
            auto baseline = querypipe::baseline_query(build.slots, topic.qid);
            outcome.ranking =
                retrieve(idx, topic.qid, baseline.terms, hindi_stopwords, options.ranker);
        } else {
            auto candidates =
                querypipe::generate_candidates(build.slots, topic.qid, options.candidate_cap);
            auto selection = select_best_candidate(candidates, idx, qrels, hindi_stopwords,
                                                   options.ranker, options.policy);
            outcome.ranking = selection.chosen_ranking;
            outcome.selection = std::move(selection);
        }
    } catch (const Error& e) {
        outcome.ranking.reset();
        outcome.selection.reset();
        outcome.warnings.push_back("topic " + topic.qid + " skipped: " + e.what());
    }
    return outcome;
}

}  // namespace

ExperimentResult run_experiment(std::span<const corpus::Topic> topics,
                                const index::InvertedIndex& idx,
                                const lexicon::Dictionary& dictionary,
                                const lexicon::StopwordSet& english_stopwords,
                                const lexicon::StopwordSet& hindi_stopwords,
                                const translit::Transliterator& transliterator,
                                const corpus::Qrels& qrels, Mode mode,
                                const ExperimentOptions& options) {
    std::vector<TopicOutcome> outcomes(topics.size());

    auto work = [&](std::size_t i) {
        outcomes[i] = process_topic(topics[i], idx, dictionary, english_stopwords,
                                    hindi_stopwords, transliterator, qrels, mode, options);
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || topics.size() <= 1) {
        for (std::size_t i = 0; i < topics.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n_workers = std::min<std::size_t>(threads, topics.size());
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= outcomes.size()) break;
                    work(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    // Deterministic reduction in topic order, independent of scheduling.
    ExperimentResult result;
    for (TopicOutcome& outcome : outcomes) {
        for (std::string& w : outcome.warnings) result.warnings.push_back(std::move(w));
        if (!outcome.ranking) continue;
        result.run.emplace(outcome.qid, std::move(*outcome.ranking));
        if (outcome.selection) result.selections.push_back(std::move(*outcome.selection));
    }
    result.report = evaluate_run(result.run, qrels);
    return result;
}

namespace {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

void write_report_text(std::ostream& out,
                       std::span<const std::pair<std::string, const EvalReport*>> columns) {
    auto row = [&](const std::string& label, auto getter) {
        out << label;
        for (std::size_t pad = label.size(); pad < 28; ++pad) out << ' ';
        for (const auto& [name, report] : columns) {
            std::string cell = getter(*report);
            out << "  " << cell;
            for (std::size_t pad = cell.size(); pad < 10; ++pad) out << ' ';
        }
        out << '\n';
    };

    out << "Metric";
    for (std::size_t pad = 6; pad < 28; ++pad) out << ' ';
    for (const auto& [name, report] : columns) {
        out << "  " << name;
        for (std::size_t pad = name.size(); pad < 10; ++pad) out << ' ';
    }
    out << '\n';

    row("No. of query", [](const EvalReport& r) { return std::to_string(r.num_queries); });
    row("No. of retrieve documents",
        [](const EvalReport& r) { return std::to_string(r.num_retrieved); });
    row("No. of rel. documents",
        [](const EvalReport& r) { return std::to_string(r.num_relevant); });
    row("No. of retrieve relevant",
        [](const EvalReport& r) { return std::to_string(r.num_relevant_retrieved); });
    for (std::size_t level = 0; level < 11; ++level) {
        char label[16];
        std::snprintf(label, sizeof(label), "At %.2f", static_cast<double>(level) / 10.0);
        row(label, [level](const EvalReport& r) { return format_value(r.interp_pr[level]); });
    }
    row("MAP", [](const EvalReport& r) { return format_value(r.map); });
    for (std::size_t cutoff : kPrecisionCutoffs) {
        std::string label = "At " + std::to_string(cutoff) + " docs";
        row(label,
            [cutoff](const EvalReport& r) { return format_value(r.precision_at.at(cutoff)); });
    }
    row("R-precision", [](const EvalReport& r) { return format_value(r.r_precision); });
}

void write_report_csv(std::ostream& out, const EvalReport& report) {
    out << "metric,value\n";
    out << "num_q," << report.num_queries << '\n';
    out << "num_ret," << report.num_retrieved << '\n';
    out << "num_rel," << report.num_relevant << '\n';
    out << "num_rel_ret," << report.num_relevant_retrieved << '\n';
    char buf[48];
    for (std::size_t level = 0; level < 11; ++level) {
        std::snprintf(buf, sizeof(buf), "ircl_prn.%.2f,%.4f",
                      static_cast<double>(level) / 10.0, report.interp_pr[level]);
        out << buf << '\n';
    }
    std::snprintf(buf, sizeof(buf), "map,%.4f", report.map);
    out << buf << '\n';
    for (std::size_t cutoff : kPrecisionCutoffs) {
        std::snprintf(buf, sizeof(buf), "P_%zu,%.4f", cutoff, report.precision_at.at(cutoff));
        out << buf << '\n';
    }
    std::snprintf(buf, sizeof(buf), "Rprec,%.4f", report.r_precision);
    out << buf << '\n';
}

}  // namespace clir::eval
