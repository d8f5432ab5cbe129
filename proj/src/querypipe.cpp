#include "clir/querypipe.hpp"

#include "clir/corpus.hpp"
#include "clir/errors.hpp"

namespace clir::querypipe {

std::string QueryCandidate::text() const {
    std::string out;
    for (const std::string& term : terms) {
        if (!out.empty()) out += ' ';
        out += term;
    }
    return out;
}

std::string QueryCandidate::mask_bits() const {
    std::string bits;
    bits.reserve(choice_mask.size());
    for (std::uint8_t bit : choice_mask) bits += bit ? '1' : '0';
    return bits;
}

std::uint64_t QueryCandidate::mask_value() const {
    std::uint64_t value = 0;
    for (std::uint8_t bit : choice_mask) value = (value << 1) | (bit ? 1 : 0);
    return value;
}

std::vector<std::string> extract_content_terms(std::string_view title,
                                               const lexicon::StopwordSet& stopwords) {
    std::vector<std::string> terms;
    for (std::string& token : corpus::tokenize(title)) {
        if (stopwords.contains(token)) continue;
        terms.push_back(std::move(token));
    }
    if (terms.empty()) throw EmptyQuery();
    return terms;
}

SlotBuild build_slots(std::span<const std::string> terms, const lexicon::Dictionary& dictionary,
                      const translit::Transliterator& transliterator) {
    SlotBuild result;
    std::size_t position = 0;
    for (const std::string& term : terms) {
        TermSlot slot;
        slot.english = term;
        if (auto translations = dictionary.lookup(term))
            slot.translation = translations->front();
        try {
            slot.transliteration = transliterator.transliterate(term);
        } catch (const UntokenizableInput&) {
            // not representable in the scheme; the slot keeps only its
            // translation, if any
        }
        if (!slot.translation && !slot.transliteration) {
            result.dropped.push_back(term);
            continue;
        }
        slot.position = position++;
        result.slots.push_back(std::move(slot));
    }
    if (result.slots.empty()) throw NoUsableTerms();
    return result;
}

namespace {

QueryCandidate render(std::span<const TermSlot> slots, const std::string& qid,
                      const std::vector<std::uint8_t>& mask) {
    QueryCandidate candidate;
    candidate.qid = qid;
    candidate.choice_mask = mask;
    candidate.terms.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
        candidate.terms.push_back(mask[i] ? *slots[i].transliteration : *slots[i].translation);
    return candidate;
}

}  // namespace

QueryCandidate baseline_query(std::span<const TermSlot> slots, const std::string& qid) {
    if (slots.empty()) throw std::invalid_argument("baseline_query: no slots");
    std::vector<std::uint8_t> mask(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (!slots[i].translation) mask[i] = 1;
    return render(slots, qid, mask);
}

std::vector<QueryCandidate> generate_candidates(std::span<const TermSlot> slots,
                                                const std::string& qid, std::size_t cap) {
    if (slots.empty()) throw std::invalid_argument("generate_candidates: no slots");
    std::vector<std::size_t> variable;  // indices of two-variant slots
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].has_both()) variable.push_back(i);

    const std::size_t e = variable.size();
    if (e >= 63 || (std::uint64_t{1} << e) > cap) throw CandidateExplosion(e, cap);
    const std::uint64_t count = std::uint64_t{1} << e;

    // Fixed bits: translation when present, else forced transliteration.
    std::vector<std::uint8_t> mask(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (!slots[i].translation) mask[i] = 1;

    std::vector<QueryCandidate> candidates;
    candidates.reserve(count);
    for (std::uint64_t value = 0; value < count; ++value) {
        // first variable slot is the most significant bit, so the list is
        // in binary counting order of the full mask
        for (std::size_t bit = 0; bit < e; ++bit)
            mask[variable[bit]] = static_cast<std::uint8_t>((value >> (e - 1 - bit)) & 1);
        candidates.push_back(render(slots, qid, mask));
    }
    return candidates;
}

void dump_candidates(std::ostream& out, std::span<const QueryCandidate> candidates) {
    for (const QueryCandidate& candidate : candidates)
        out << candidate.qid << '\t' << candidate.mask_bits() << '\t' << candidate.text() << '\n';
}

}  // namespace clir::querypipe
