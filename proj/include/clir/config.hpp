#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "clir/eval.hpp"
#include "clir/index.hpp"

namespace clir::config {

/// Everything a batch experiment needs, resolvable from a flat
/// `key=value` file with command-line overrides on top. Unknown keys are
/// rejected so typos fail loudly.
struct ExperimentConfig {
    std::filesystem::path corpus;
    std::filesystem::path topics;
    std::filesystem::path qrels;
    std::filesystem::path dictionary;
    std::string dictionary_encoding = "utf8";  // utf8 | iscii
    std::filesystem::path codec_table;
    std::filesystem::path stopwords_english;
    std::filesystem::path stopwords_hindi;
    std::filesystem::path scheme;
    std::filesystem::path respell;
    std::filesystem::path index_dir;
    std::filesystem::path output_dir = "runs";

    index::Bm25Params ranker;
    std::string mode = "both";  // eht | ehrt | both
    std::size_t candidate_cap = std::size_t{1} << 16;
    std::string selection = "oracle";  // oracle | score-mass
    unsigned threads = 1;
    std::string runtag = "clir";

    void apply(const std::string& key, const std::string& value);

    /// Numeric ranges and enumerations; throws ConfigError.
    void validate_params() const;

    /// The given paths must exist; empty entries in `required` are skipped.
    void require_paths(std::initializer_list<const std::filesystem::path*> required) const;

    std::filesystem::path index_file() const { return index_dir / "clir.idx"; }

    eval::Mode parsed_mode_single() const;  // eht or ehrt, not both
    eval::SelectionPolicy parsed_policy() const;
    lexicon::SourceEncoding parsed_dictionary_encoding() const;
};

ExperimentConfig load_config(const std::filesystem::path& file);
ExperimentConfig load_config_stream(std::istream& in);

}  // namespace clir::config
