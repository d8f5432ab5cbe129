#include "synth.hpp"

#include <algorithm>

namespace clir_test {

namespace {

struct VariantWord {
    std::string english;
    std::string translation;
    std::string transliteration;
};

std::vector<VariantWord> variant_vocabulary(const clir::lexicon::Dictionary& dictionary,
                                            const clir::translit::Transliterator& transliterator) {
    std::vector<VariantWord> words;
    for (const auto& [headword, entry] : dictionary.entries()) {
        VariantWord word;
        word.english = headword;
        word.translation = entry.translations.front();
        word.transliteration = transliterator.transliterate(headword);
        words.push_back(std::move(word));
    }
    return words;
}

std::string docno_for(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "SY%04zu", i);
    return buf;
}

}  // namespace

SynthExperiment make_synthetic_experiment(std::uint32_t seed, const SynthOptions& options,
                                          const clir::lexicon::Dictionary& dictionary,
                                          const clir::translit::Transliterator& transliterator) {
    std::mt19937 rng(seed);
    SynthExperiment experiment;
    const auto vocab = variant_vocabulary(dictionary, transliterator);

    // filler pool: every translation, so noise shares vocabulary with topics
    std::vector<std::string> filler;
    for (const auto& word : vocab) filler.push_back(word.translation);

    std::uniform_int_distribution<std::size_t> pick_word(0, vocab.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_filler(0, filler.size() - 1);
    std::uniform_int_distribution<int> percent(0, 99);

    // topics over 1..3 distinct content words
    std::vector<std::vector<std::size_t>> topic_words(options.num_topics);
    for (std::size_t t = 0; t < options.num_topics; ++t) {
        std::uniform_int_distribution<std::size_t> pick_count(1, 3);
        std::size_t count = pick_count(rng);
        while (topic_words[t].size() < count) {
            std::size_t w = pick_word(rng);
            if (std::find(topic_words[t].begin(), topic_words[t].end(), w) ==
                topic_words[t].end())
                topic_words[t].push_back(w);
        }
        clir::corpus::Topic topic;
        topic.qid = std::to_string(100 + t);
        for (std::size_t i = 0; i < topic_words[t].size(); ++i) {
            if (i > 0) topic.title += percent(rng) < 40 ? " in the " : " ";
            topic.title += vocab[topic_words[t][i]].english;
        }
        experiment.topics.push_back(std::move(topic));
    }

    std::uniform_int_distribution<std::size_t> pick_len(options.min_doc_tokens,
                                                        options.max_doc_tokens);
    std::uniform_int_distribution<std::size_t> pick_topic(0, options.num_topics - 1);

    for (std::size_t d = 0; d < options.num_docs; ++d) {
        clir::corpus::Document doc;
        doc.docno = docno_for(d);
        const bool themed = d < options.num_topics || percent(rng) < 40;
        const std::size_t theme = d < options.num_topics ? d : pick_topic(rng);

        std::vector<std::string> tokens;
        if (themed) {
            for (std::size_t w : topic_words[theme]) {
                std::uniform_int_distribution<int> reps(1, 3);
                const bool use_transliteration = percent(rng) < options.transliteration_bias_pct;
                const std::string& form =
                    use_transliteration ? vocab[w].transliteration : vocab[w].translation;
                for (int r = reps(rng); r > 0; --r) tokens.push_back(form);
            }
        }
        const std::size_t target_len = pick_len(rng);
        while (tokens.size() < target_len) tokens.push_back(filler[pick_filler(rng)]);
        std::shuffle(tokens.begin(), tokens.end(), rng);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i > 0) doc.text += ' ';
            doc.text += tokens[i];
        }
        experiment.docs.push_back(std::move(doc));

        if (themed) {
            experiment.qrels.add(experiment.topics[theme].qid, experiment.docs.back().docno, 1);
        } else if (percent(rng) < 20) {
            // judged nonrelevant for a random topic
            experiment.qrels.add(experiment.topics[pick_topic(rng)].qid,
                                 experiment.docs.back().docno, 0);
        }
    }
    return experiment;
}

SynthExperiment make_transliteration_heavy_experiment(
    const clir::lexicon::Dictionary& dictionary,
    const clir::translit::Transliterator& transliterator) {
    SynthExperiment experiment;

    struct Theme {
        std::string qid;
        std::string title;
        std::vector<std::string> relevant_tokens;  // what relevant docs contain
        std::string decoy_token;                   // what irrelevant docs contain
    };

    auto transliteration_of = [&](const std::string& word) {
        return transliterator.transliterate(word);
    };
    auto translation_of = [&](const std::string& word) {
        return dictionary.lookup(word)->front();
    };

    // Relevant documents are written the way Hindi news writes loanwords:
    // the transliterated form. The dictionary translation appears only in
    // off-topic documents, so the translated query retrieves noise.
    std::vector<Theme> themes;
    for (const std::string& word : {"computer", "cricket", "internet"}) {
        Theme theme;
        theme.qid = std::to_string(200 + themes.size());
        theme.title = word;
        theme.relevant_tokens = {transliteration_of(word)};
        theme.decoy_token = translation_of(word);
        themes.push_back(std::move(theme));
    }
    // One translation-favored topic keeps the baseline honest.
    {
        Theme theme;
        theme.qid = "210";
        theme.title = "Democracy in India";
        theme.relevant_tokens = {translation_of("democracy"), translation_of("india")};
        theme.decoy_token = transliteration_of("democracy");
        themes.push_back(std::move(theme));
    }

    const std::vector<std::string> filler = {"पानी", "नदी",  "सरकार", "विद्यालय", "समाचार",
                                             "देश",  "भोजन", "संगीत",  "इतिहास",   "बाज़ार"};
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> pick_filler(0, filler.size() - 1);
    std::size_t next_doc = 0;

    for (const Theme& theme : themes) {
        experiment.topics.push_back({theme.qid, theme.title, "", ""});
        for (int r = 0; r < 8; ++r) {  // relevant docs
            clir::corpus::Document doc;
            doc.docno = docno_for(next_doc++);
            std::vector<std::string> tokens;
            for (const std::string& token : theme.relevant_tokens)
                for (int k = 0; k < 2; ++k) tokens.push_back(token);
            for (int k = 0; k < 10; ++k) tokens.push_back(filler[pick_filler(rng)]);
            std::shuffle(tokens.begin(), tokens.end(), rng);
            for (std::size_t i = 0; i < tokens.size(); ++i)
                doc.text += (i ? " " : "") + tokens[i];
            experiment.qrels.add(theme.qid, doc.docno, 1);
            experiment.docs.push_back(std::move(doc));
        }
        for (int r = 0; r < 8; ++r) {  // decoys: on-translation, off-topic
            clir::corpus::Document doc;
            doc.docno = docno_for(next_doc++);
            std::vector<std::string> tokens;
            for (int k = 0; k < 2; ++k) tokens.push_back(theme.decoy_token);
            for (int k = 0; k < 10; ++k) tokens.push_back(filler[pick_filler(rng)]);
            std::shuffle(tokens.begin(), tokens.end(), rng);
            for (std::size_t i = 0; i < tokens.size(); ++i)
                doc.text += (i ? " " : "") + tokens[i];
            experiment.qrels.add(theme.qid, doc.docno, 0);
            experiment.docs.push_back(std::move(doc));
        }
    }
    return experiment;
}

}  // namespace clir_test
