#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace clir {

// Base for all toolkit errors. Subclasses carry the offending location so
// callers can report it without re-parsing the message.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnassignedByte : public Error {
public:
    UnassignedByte(std::size_t position, std::uint8_t byte, const std::string& context = "")
        : Error(context + "unassigned ISCII byte 0x" + hex(byte) + " at offset "
                + std::to_string(position)),
          position(position), byte(byte) {}
    std::size_t position;
    std::uint8_t byte;

private:
    static std::string hex(std::uint8_t b) {
        static const char* digits = "0123456789ABCDEF";
        return {digits[b >> 4], digits[b & 0xF]};
    }
};

class UnmappableScalar : public Error {
public:
    UnmappableScalar(std::size_t position, char32_t scalar)
        : Error("scalar U+" + to_hex(scalar) + " at index " + std::to_string(position)
                + " has no ISCII encoding"),
          position(position), scalar(scalar) {}
    std::size_t position;
    char32_t scalar;

private:
    static std::string to_hex(char32_t cp) {
        std::string s;
        for (int shift = 28; shift >= 0; shift -= 4) {
            unsigned nibble = (static_cast<unsigned>(cp) >> shift) & 0xF;
            if (s.empty() && nibble == 0 && shift >= 16) continue;
            s += "0123456789ABCDEF"[nibble];
        }
        while (s.size() < 4) s.insert(s.begin(), '0');
        return s;
    }
};

class UntokenizableInput : public Error {
public:
    explicit UntokenizableInput(std::size_t position)
        : Error("no scheme token matches at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

class MalformedLine : public Error {
public:
    MalformedLine(std::size_t lineno, const std::string& detail)
        : Error("line " + std::to_string(lineno) + ": " + detail), lineno(lineno) {}
    std::size_t lineno;
};

class MissingDocno : public Error {
public:
    explicit MissingDocno(std::size_t record_index)
        : Error("document record " + std::to_string(record_index) + " has no DOCNO"),
          record_index(record_index) {}
    std::size_t record_index;
};

class UnterminatedRecord : public Error {
public:
    explicit UnterminatedRecord(std::size_t offset)
        : Error("record opened at offset " + std::to_string(offset) + " is never closed"),
          offset(offset) {}
    std::size_t offset;
};

class MissingTitle : public Error {
public:
    explicit MissingTitle(const std::string& qid)
        : Error("topic " + qid + " has an empty title"), qid(qid) {}
    std::string qid;
};

class DuplicateJudgment : public Error {
public:
    DuplicateJudgment(const std::string& qid, const std::string& docno)
        : Error("duplicate judgment for (" + qid + ", " + docno + ")"), qid(qid), docno(docno) {}
    std::string qid;
    std::string docno;
};

class DuplicateDocno : public Error {
public:
    explicit DuplicateDocno(const std::string& docno)
        : Error("duplicate docno " + docno), docno(docno) {}
    std::string docno;
};

class CorruptIndexFile : public Error {
public:
    explicit CorruptIndexFile(const std::string& detail)
        : Error("corrupt index file: " + detail) {}
};

class EmptyQuery : public Error {
public:
    EmptyQuery() : Error("no content terms survive stopword removal") {}
};

class NoUsableTerms : public Error {
public:
    NoUsableTerms() : Error("no term could be translated or transliterated") {}
};

class CandidateExplosion : public Error {
public:
    CandidateExplosion(std::size_t variable_slots, std::size_t cap)
        : Error("2^" + std::to_string(variable_slots) + " candidates exceed cap "
                + std::to_string(cap)),
          variable_slots(variable_slots), cap(cap) {}
    std::size_t variable_slots;
    std::size_t cap;
};

class UnjudgedQuery : public Error {
public:
    explicit UnjudgedQuery(const std::string& qid)
        : Error("query " + qid + " does not appear in the qrels"), qid(qid) {}
    std::string qid;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace clir
