#include "clir/config.hpp"

#include <fstream>

#include "clir/errors.hpp"

namespace clir::config {

namespace {

std::string trim(const std::string& s) {
    std::size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t");
    return s.substr(start, end - start + 1);
}

std::size_t parse_size(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        long long v = std::stoll(value, &consumed);
        if (consumed != value.size() || v < 0) throw std::invalid_argument(value);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError(key + " must be a non-negative integer, got '" + value + "'");
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        double v = std::stod(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + " must be a number, got '" + value + "'");
    }
}

}  // namespace

void ExperimentConfig::apply(const std::string& key, const std::string& value) {
    if (key == "corpus") corpus = value;
    else if (key == "topics") topics = value;
    else if (key == "qrels") qrels = value;
    else if (key == "dictionary") dictionary = value;
    else if (key == "dictionary_encoding") dictionary_encoding = value;
    else if (key == "codec_table") codec_table = value;
    else if (key == "stopwords_english") stopwords_english = value;
    else if (key == "stopwords_hindi") stopwords_hindi = value;
    else if (key == "scheme") scheme = value;
    else if (key == "respell") respell = value;
    else if (key == "index_dir") index_dir = value;
    else if (key == "output_dir") output_dir = value;
    else if (key == "k1") ranker.k1 = parse_real(key, value);
    else if (key == "b") ranker.b = parse_real(key, value);
    else if (key == "cutoff") ranker.cutoff = parse_size(key, value);
    else if (key == "mode") mode = value;
    else if (key == "candidate_cap") candidate_cap = parse_size(key, value);
    else if (key == "selection") selection = value;
    else if (key == "threads") threads = static_cast<unsigned>(parse_size(key, value));
    else if (key == "runtag") runtag = value;
    else throw ConfigError("unknown config key '" + key + "'");
}

void ExperimentConfig::validate_params() const {
    if (ranker.k1 <= 0.0) throw ConfigError("k1 must be > 0");
    if (ranker.b < 0.0 || ranker.b > 1.0) throw ConfigError("b must be in [0, 1]");
    if (ranker.cutoff < 1) throw ConfigError("cutoff must be >= 1");
    if (candidate_cap < 1) throw ConfigError("candidate_cap must be >= 1");
    if (threads < 1) throw ConfigError("threads must be >= 1");
    if (mode != "eht" && mode != "ehrt" && mode != "both")
        throw ConfigError("mode must be eht, ehrt or both");
    if (selection != "oracle" && selection != "score-mass")
        throw ConfigError("selection must be oracle or score-mass");
    if (dictionary_encoding != "utf8" && dictionary_encoding != "iscii")
        throw ConfigError("dictionary_encoding must be utf8 or iscii");
    if (dictionary_encoding == "iscii" && codec_table.empty())
        throw ConfigError("dictionary_encoding=iscii needs codec_table");
    if (runtag.empty() || runtag.find_first_of(" \t") != std::string::npos)
        throw ConfigError("runtag must be a single non-empty token");
}

void ExperimentConfig::require_paths(
    std::initializer_list<const std::filesystem::path*> required) const {
    for (const std::filesystem::path* path : required) {
        if (path->empty()) throw ConfigError("a required path is not configured");
        if (!std::filesystem::exists(*path))
            throw ConfigError("path does not exist: " + path->string());
    }
}

eval::Mode ExperimentConfig::parsed_mode_single() const {
    if (mode == "eht") return eval::Mode::eht;
    if (mode == "ehrt") return eval::Mode::ehrt;
    throw ConfigError("expected a single mode here, got '" + mode + "'");
}

eval::SelectionPolicy ExperimentConfig::parsed_policy() const {
    return selection == "score-mass" ? eval::SelectionPolicy::score_mass
                                     : eval::SelectionPolicy::oracle;
}

lexicon::SourceEncoding ExperimentConfig::parsed_dictionary_encoding() const {
    return dictionary_encoding == "iscii" ? lexicon::SourceEncoding::iscii
                                          : lexicon::SourceEncoding::utf8;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file " + file.string());
    return load_config_stream(in);
}

ExperimentConfig load_config_stream(std::istream& in) {
    ExperimentConfig config;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        config.apply(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return config;
}

}  // namespace clir::config
