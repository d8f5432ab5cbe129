#include "clir/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "clir/errors.hpp"
#include "clir/utf8.hpp"

namespace clir::corpus {

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true;  // trims leading space
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            if (!in_space) out += ' ';
            in_space = true;
        } else {
            out += c;
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// Removes <...> spans; a '<' with no matching '>' is kept as text.
std::string strip_tags(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == '<') {
            std::size_t close = s.find('>', pos + 1);
            if (close != std::string_view::npos) {
                pos = close + 1;
                out += ' ';
                continue;
            }
        }
        out += s[pos];
        ++pos;
    }
    return out;
}

// Finds <tag>...</tag>, or <tag>... up to the next '<' at record level when
// the closing tag is absent (TREC-classic fields are often unclosed).
bool extract_field(std::string_view record, std::string_view tag, std::string* value) {
    std::string open = "<" + std::string(tag) + ">";
    std::size_t start = record.find(open);
    if (start == std::string_view::npos) return false;
    start += open.size();
    std::string close = "</" + std::string(tag) + ">";
    std::size_t end = record.find(close, start);
    if (end == std::string_view::npos) {
        end = record.find('<', start);
        if (end == std::string_view::npos) end = record.size();
    }
    *value = std::string(record.substr(start, end - start));
    return true;
}

bool is_devanagari(char32_t cp) {
    return cp >= 0x0900 && cp <= 0x097F;
}

// Signs that attach to a preceding base: candrabindu/anusvara/visarga,
// nukta, matras, halant, vedic tone marks, vocalic matras.
bool is_dependent_sign(char32_t cp) {
    return (cp >= 0x0900 && cp <= 0x0903) || cp == 0x093A || cp == 0x093B || cp == 0x093C ||
           (cp >= 0x093E && cp <= 0x094F) || (cp >= 0x0951 && cp <= 0x0957) ||
           (cp >= 0x0962 && cp <= 0x0963);
}

bool is_devanagari_word_char(char32_t cp) {
    if (!is_devanagari(cp)) return false;
    if (cp == 0x0964 || cp == 0x0965) return false;  // danda, double danda
    if (cp == 0x0970 || cp == 0x0971) return false;  // abbreviation / high spacing dot
    return true;
}

}  // namespace

void Qrels::add(const std::string& qid, const std::string& docno, int grade) {
    auto& docs = by_query_[qid];
    if (docs.count(docno)) throw DuplicateJudgment(qid, docno);
    docs[docno] = grade;
}

bool Qrels::has_query(const std::string& qid) const {
    return by_query_.count(qid) > 0;
}

bool Qrels::is_relevant(const std::string& qid, const std::string& docno) const {
    return grade(qid, docno) >= 1;
}

int Qrels::grade(const std::string& qid, const std::string& docno) const {
    auto it = by_query_.find(qid);
    if (it == by_query_.end()) return 0;
    auto jt = it->second.find(docno);
    return jt == it->second.end() ? 0 : jt->second;
}

std::size_t Qrels::relevant_count(const std::string& qid) const {
    auto it = by_query_.find(qid);
    if (it == by_query_.end()) return 0;
    std::size_t n = 0;
    for (const auto& [docno, grade] : it->second)
        if (grade >= 1) ++n;
    return n;
}

Qrels Qrels::parse(std::istream& in) {
    Qrels qrels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string qid, iter, docno, rel;
        std::string extra;
        if (!(fields >> qid >> iter >> docno >> rel) || (fields >> extra))
            throw MalformedLine(lineno, "expected `qid iter docno rel`");
        int grade = 0;
        try {
            std::size_t consumed = 0;
            grade = std::stoi(rel, &consumed);
            if (consumed != rel.size()) throw std::invalid_argument(rel);
        } catch (const std::exception&) {
            throw MalformedLine(lineno, "relevance grade '" + rel + "' is not an integer");
        }
        if (grade < 0) throw MalformedLine(lineno, "negative relevance grade");
        qrels.add(qid, docno, grade);
    }
    return qrels;
}

Qrels Qrels::parse_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open qrels " + file.string());
    return parse(in);
}

std::vector<Document> parse_documents(std::istream& in) {
    std::string data = read_all(in);
    std::vector<Document> docs;
    std::size_t pos = 0;
    std::size_t record_index = 0;
    while (true) {
        std::size_t open = data.find("<DOC>", pos);
        if (open == std::string::npos) break;
        std::size_t close = data.find("</DOC>", open);
        if (close == std::string::npos) throw UnterminatedRecord(open);
        std::string_view record(data.data() + open, close - open);
        ++record_index;

        Document doc;
        std::string docno;
        if (!extract_field(record, "DOCNO", &docno)) throw MissingDocno(record_index);
        doc.docno = collapse_whitespace(docno);
        if (doc.docno.empty()) throw MissingDocno(record_index);

        // Concatenate every TEXT section of the record.
        std::string text_joined;
        std::size_t tpos = 0;
        while (true) {
            std::size_t topen = record.find("<TEXT>", tpos);
            if (topen == std::string_view::npos) break;
            topen += 6;
            std::size_t tclose = record.find("</TEXT>", topen);
            if (tclose == std::string_view::npos) tclose = record.size();
            text_joined.append(record.substr(topen, tclose - topen));
            text_joined += ' ';
            tpos = tclose;
        }
        doc.text = collapse_whitespace(strip_tags(text_joined));
        docs.push_back(std::move(doc));
        pos = close + 6;
    }
    return docs;
}

std::vector<Document> parse_documents_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error("cannot open corpus file " + file.string());
    return parse_documents(in);
}

void serialize_documents(std::ostream& out, std::span<const Document> docs) {
    for (const Document& doc : docs) {
        out << "<DOC>\n<DOCNO> " << doc.docno << " </DOCNO>\n<TEXT>\n"
            << doc.text << "\n</TEXT>\n</DOC>\n";
    }
}

std::vector<Topic> parse_topics(std::istream& in) {
    std::string data = read_all(in);
    std::vector<Topic> topics;
    std::size_t pos = 0;
    while (true) {
        std::size_t open = data.find("<top>", pos);
        if (open == std::string::npos) break;
        std::size_t close = data.find("</top>", open);
        if (close == std::string::npos) throw UnterminatedRecord(open);
        std::string_view record(data.data() + open, close - open);

        Topic topic;
        std::string num;
        extract_field(record, "num", &num);
        num = collapse_whitespace(num);
        // "Number: 26" -> "26"; otherwise keep as-is.
        std::size_t digit = num.find_first_of("0123456789");
        if (digit != std::string::npos) {
            std::size_t end = num.find_first_not_of("0123456789", digit);
            topic.qid = num.substr(digit, end == std::string::npos ? std::string::npos
                                                                   : end - digit);
        } else {
            topic.qid = num;
        }

        std::string field;
        if (extract_field(record, "title", &field)) topic.title = collapse_whitespace(field);
        if (topic.title.empty()) throw MissingTitle(topic.qid.empty() ? "<unnumbered>" : topic.qid);
        if (extract_field(record, "desc", &field)) topic.description = collapse_whitespace(field);
        if (extract_field(record, "narr", &field)) topic.narrative = collapse_whitespace(field);
        topics.push_back(std::move(topic));
        pos = close + 6;
    }
    return topics;
}

std::vector<Topic> parse_topics_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error("cannot open topic file " + file.string());
    return parse_topics(in);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::u32string scalars = utf8::decode(text);
    std::string current;
    bool current_empty = true;

    auto flush = [&] {
        if (!current_empty) tokens.push_back(current);
        current.clear();
        current_empty = true;
    };

    for (char32_t cp : scalars) {
        if (cp == 0x200C || cp == 0x200D) continue;  // ZWNJ/ZWJ transparent
        bool word_char = false;
        char32_t emit = cp;
        if (cp < 0x80) {
            if (std::isalnum(static_cast<unsigned char>(cp))) {
                word_char = true;
                emit = static_cast<char32_t>(std::tolower(static_cast<unsigned char>(cp)));
            }
        } else if (is_devanagari_word_char(cp)) {
            // an orphan dependent sign cannot open a token
            word_char = !(current_empty && is_dependent_sign(cp));
        }
        if (word_char) {
            utf8::append(current, emit);
            current_empty = false;
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

}  // namespace clir::corpus
