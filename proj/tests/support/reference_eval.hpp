#pragma once

// Brute-force evaluation oracle, written independently of the library's
// evaluator: everything is recomputed by rescanning the ranking from the
// top, no incremental counters, no shared helper code.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "clir/corpus.hpp"
#include "clir/index.hpp"

namespace clir_test {

struct ReferenceReport {
    std::size_t num_queries = 0;
    std::size_t num_retrieved = 0;
    std::size_t num_relevant = 0;
    std::size_t num_relevant_retrieved = 0;
    double map = 0.0;
    std::array<double, 11> interp_pr{};
    std::map<std::size_t, double> precision_at;
    double r_precision = 0.0;
};

double reference_average_precision(const clir::index::RankedList& ranked,
                                   const clir::corpus::Qrels& qrels, const std::string& qid);

std::array<double, 11> reference_interpolated_precision(const clir::index::RankedList& ranked,
                                                        const clir::corpus::Qrels& qrels,
                                                        const std::string& qid);

ReferenceReport reference_evaluate(const std::map<std::string, clir::index::RankedList>& run,
                                   const clir::corpus::Qrels& qrels);

}  // namespace clir_test
