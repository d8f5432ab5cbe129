#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clir/lexicon.hpp"
#include "clir/translit.hpp"

namespace clir::querypipe {

/// One content term of the English title with its Hindi variants. A slot
/// survives as long as at least one variant exists.
struct TermSlot {
    std::size_t position = 0;
    std::string english;
    std::optional<std::string> translation;      // first dictionary translation
    std::optional<std::string> transliteration;  // scheme rendering

    bool has_both() const { return translation && transliteration; }
};

/// One Hindi query: per-slot variant choices (0 = translation,
/// 1 = transliteration) plus the rendered term sequence.
struct QueryCandidate {
    std::string qid;
    std::vector<std::uint8_t> choice_mask;  // one bit per slot, slot order
    std::vector<std::string> terms;

    std::string text() const;       // terms joined by single spaces
    std::string mask_bits() const;  // e.g. "010"
    std::uint64_t mask_value() const;  // slot 0 is the most significant bit
};

/// Tokenized title minus stopwords, original order. Throws EmptyQuery.
std::vector<std::string> extract_content_terms(std::string_view title,
                                               const lexicon::StopwordSet& stopwords);

struct SlotBuild {
    std::vector<TermSlot> slots;
    std::vector<std::string> dropped;  // terms with neither variant, for warnings
};

/// Translation via dictionary lookup (first listed translation),
/// transliteration via the scheme; a slot with neither is dropped.
/// Throws NoUsableTerms when nothing survives.
SlotBuild build_slots(std::span<const std::string> terms, const lexicon::Dictionary& dictionary,
                      const translit::Transliterator& transliterator);

/// The all-translation query; slots without a translation fall back to
/// their transliteration with the mask bit forced to 1.
QueryCandidate baseline_query(std::span<const TermSlot> slots, const std::string& qid);

/// Every variant combination, slots kept in position. With e two-variant
/// slots this is exactly 2^e candidates in binary counting order over the
/// variable bits; 2^e > cap raises CandidateExplosion instead of
/// truncating. The first candidate is the baseline, the last the
/// all-transliteration extreme.
std::vector<QueryCandidate> generate_candidates(std::span<const TermSlot> slots,
                                                const std::string& qid, std::size_t cap);

/// Dump format: one `qid<TAB>mask-bits<TAB>query-text` line per candidate.
void dump_candidates(std::ostream& out, std::span<const QueryCandidate> candidates);

}  // namespace clir::querypipe
