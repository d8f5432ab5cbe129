// Command-line front end: index / search / translate / run / evaluate.
// Exit codes: 0 success, 1 usage or config error, 2 data error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "CLI11.hpp"

#include "clir/config.hpp"
#include "clir/corpus.hpp"
#include "clir/encoding.hpp"
#include "clir/errors.hpp"
#include "clir/eval.hpp"
#include "clir/index.hpp"
#include "clir/lexicon.hpp"
#include "clir/querypipe.hpp"
#include "clir/translit.hpp"

namespace {

using clir::config::ExperimentConfig;

struct Resources {
    clir::lexicon::Dictionary dictionary;
    clir::lexicon::StopwordSet english_stopwords;
    clir::lexicon::StopwordSet hindi_stopwords;
    std::optional<clir::translit::Transliterator> transliterator;
};

Resources load_query_resources(const ExperimentConfig& config) {
    config.require_paths({&config.dictionary, &config.stopwords_english, &config.scheme,
                          &config.respell});
    Resources res;
    std::optional<clir::encoding::CodecTable> codec;
    if (config.parsed_dictionary_encoding() == clir::lexicon::SourceEncoding::iscii) {
        config.require_paths({&config.codec_table});
        codec = clir::encoding::CodecTable::load(config.codec_table);
    }
    res.dictionary = clir::lexicon::Dictionary::load(
        config.dictionary, config.parsed_dictionary_encoding(), codec ? &*codec : nullptr);
    res.english_stopwords = clir::lexicon::StopwordSet::load(config.stopwords_english);
    if (!config.stopwords_hindi.empty()) {
        config.require_paths({&config.stopwords_hindi});
        res.hindi_stopwords = clir::lexicon::StopwordSet::load(config.stopwords_hindi);
    }
    res.transliterator.emplace(clir::translit::ItransScheme::load(config.scheme),
                               clir::translit::RespellRules::load(config.respell));
    return res;
}

std::vector<clir::corpus::Document> load_corpus(const std::filesystem::path& path) {
    std::vector<clir::corpus::Document> docs;
    if (std::filesystem::is_directory(path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(path))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            auto batch = clir::corpus::parse_documents_file(file);
            docs.insert(docs.end(), std::make_move_iterator(batch.begin()),
                        std::make_move_iterator(batch.end()));
        }
    } else {
        docs = clir::corpus::parse_documents_file(path);
    }
    return docs;
}

int cmd_index(const ExperimentConfig& config) {
    config.require_paths({&config.corpus});
    clir::lexicon::StopwordSet hindi_stopwords;
    if (!config.stopwords_hindi.empty()) {
        config.require_paths({&config.stopwords_hindi});
        hindi_stopwords = clir::lexicon::StopwordSet::load(config.stopwords_hindi);
    }
    auto docs = load_corpus(config.corpus);
    auto idx = clir::index::InvertedIndex::build(docs, hindi_stopwords);
    std::filesystem::create_directories(config.index_dir);
    idx.save(config.index_file());
    std::cout << "docs=" << idx.doc_count() << " tokens=" << idx.total_tokens()
              << " vocab=" << idx.vocab_size() << '\n';
    return 0;
}

int cmd_search(const ExperimentConfig& config, const std::string& query, const std::string& qid) {
    config.require_paths({&config.index_dir});
    auto idx = clir::index::InvertedIndex::load(config.index_file());
    clir::lexicon::StopwordSet hindi_stopwords;
    if (!config.stopwords_hindi.empty()) {
        config.require_paths({&config.stopwords_hindi});
        hindi_stopwords = clir::lexicon::StopwordSet::load(config.stopwords_hindi);
    }
    auto terms = clir::corpus::tokenize(query);
    auto ranked = clir::eval::retrieve(idx, qid, terms, hindi_stopwords, config.ranker);
    clir::index::write_trec_run(std::cout, {&ranked, 1}, config.runtag);
    return 0;
}

int cmd_translate(const ExperimentConfig& config, const std::string& query,
                  const std::string& qid, std::size_t cap) {
    Resources res = load_query_resources(config);
    auto terms = clir::querypipe::extract_content_terms(query, res.english_stopwords);
    auto build = clir::querypipe::build_slots(terms, res.dictionary, *res.transliterator);
    for (const std::string& term : build.dropped)
        std::cerr << "warning: term '" << term << "' has no translation or transliteration\n";
    auto baseline = clir::querypipe::baseline_query(build.slots, qid);
    clir::querypipe::dump_candidates(std::cout, {&baseline, 1});
    auto candidates = clir::querypipe::generate_candidates(build.slots, qid, cap);
    clir::querypipe::dump_candidates(std::cout, candidates);
    return 0;
}

void write_run_file(const std::filesystem::path& file,
                    const std::map<std::string, clir::index::RankedList>& run,
                    const std::string& runtag) {
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw clir::Error("cannot write run file " + file.string());
    std::vector<clir::index::RankedList> lists;
    lists.reserve(run.size());
    for (const auto& [qid, list] : run) lists.push_back(list);
    clir::index::write_trec_run(out, lists, runtag);
}

int cmd_run(const ExperimentConfig& config) {
    config.require_paths({&config.topics, &config.qrels, &config.index_dir});
    Resources res = load_query_resources(config);
    auto idx = clir::index::InvertedIndex::load(config.index_file());
    auto topics = clir::corpus::parse_topics_file(config.topics);
    auto qrels = clir::corpus::Qrels::parse_file(config.qrels);

    clir::eval::ExperimentOptions options;
    options.ranker = config.ranker;
    options.candidate_cap = config.candidate_cap;
    options.policy = config.parsed_policy();
    options.threads = config.threads;

    std::filesystem::create_directories(config.output_dir);

    std::vector<std::pair<std::string, clir::eval::EvalReport>> reports;
    auto run_mode = [&](clir::eval::Mode mode, const std::string& name) {
        auto result = clir::eval::run_experiment(topics, idx, res.dictionary,
                                                 res.english_stopwords, res.hindi_stopwords,
                                                 *res.transliterator, qrels, mode, options);
        for (const std::string& warning : result.warnings)
            std::cerr << "warning: " << warning << '\n';
        write_run_file(config.output_dir / (name + ".run"), result.run,
                       config.runtag + "-" + name);
        std::ofstream csv(config.output_dir / (name + ".csv"), std::ios::trunc);
        clir::eval::write_report_csv(csv, result.report);
        reports.emplace_back(name, result.report);
        if (result.run.empty()) std::cerr << "warning: " << name << " produced no rankings\n";
    };

    if (config.mode == "eht" || config.mode == "both") run_mode(clir::eval::Mode::eht, "eht");
    if (config.mode == "ehrt" || config.mode == "both") run_mode(clir::eval::Mode::ehrt, "ehrt");

    std::vector<std::pair<std::string, const clir::eval::EvalReport*>> columns;
    for (const auto& [name, report] : reports) columns.emplace_back(name, &report);
    clir::eval::write_report_text(std::cout, columns);
    std::ofstream report_file(config.output_dir / "report.txt", std::ios::trunc);
    clir::eval::write_report_text(report_file, columns);
    return 0;
}

int cmd_evaluate(const ExperimentConfig& config, const std::filesystem::path& run_path,
                 const std::filesystem::path& csv_path) {
    config.require_paths({&config.qrels, &run_path});
    std::ifstream run_in(run_path);
    if (!run_in) throw clir::Error("cannot open run file " + run_path.string());
    auto run = clir::index::read_trec_run(run_in);
    auto qrels = clir::corpus::Qrels::parse_file(config.qrels);
    auto report = clir::eval::evaluate_run(run, qrels);

    std::vector<std::pair<std::string, const clir::eval::EvalReport*>> columns;
    columns.emplace_back(run_path.stem().string(), &report);
    clir::eval::write_report_text(std::cout, columns);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::trunc);
        if (!csv) throw clir::Error("cannot write " + csv_path.string());
        clir::eval::write_report_csv(csv, report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"English-Hindi cross-language retrieval toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--set", overrides, "config override, key=value (repeatable)")
        ->allow_extra_args(false);

    auto* index_cmd = app.add_subcommand("index", "build and persist the inverted index");
    auto* search_cmd = app.add_subcommand("search", "rank documents for a Hindi query");
    auto* translate_cmd =
        app.add_subcommand("translate", "print all Hindi query candidates for an English title");
    auto* run_cmd = app.add_subcommand("run", "batch experiment: retrieve and evaluate");
    auto* evaluate_cmd = app.add_subcommand("evaluate", "score an existing run file");

    std::string query;
    std::string qid = "1";
    search_cmd->add_option("query", query, "query text")->required();
    search_cmd->add_option("--qid", qid, "query id for the output");
    translate_cmd->add_option("query", query, "English title")->required();
    translate_cmd->add_option("--qid", qid, "query id for the output");

    std::string run_file;
    std::string csv_file;
    evaluate_cmd->add_option("run", run_file, "TREC run file")->required();
    evaluate_cmd->add_option("--csv", csv_file, "also write metric,value rows here");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig config;
        if (!config_path.empty()) config = clir::config::load_config(config_path);
        for (const std::string& pair : overrides) {
            std::size_t eq = pair.find('=');
            if (eq == std::string::npos)
                throw clir::ConfigError("--set expects key=value, got '" + pair + "'");
            config.apply(pair.substr(0, eq), pair.substr(eq + 1));
        }
        config.validate_params();

        if (index_cmd->parsed()) return cmd_index(config);
        if (search_cmd->parsed()) return cmd_search(config, query, qid);
        if (translate_cmd->parsed())
            return cmd_translate(config, query, qid, config.candidate_cap);
        if (run_cmd->parsed()) return cmd_run(config);
        if (evaluate_cmd->parsed()) return cmd_evaluate(config, run_file, csv_file);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const clir::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const clir::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
