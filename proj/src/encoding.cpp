#include "clir/encoding.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "clir/errors.hpp"
#include "clir/utf8.hpp"

namespace clir::encoding {

namespace {

constexpr char32_t kCombiningNukta = U'़';

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

char32_t parse_scalar(const std::string& field, std::size_t lineno) {
    if (field.size() < 3 || field[0] != 'U' || field[1] != '+')
        throw MalformedLine(lineno, "expected U+XXXX, got '" + field + "'");
    char32_t value = 0;
    for (std::size_t i = 2; i < field.size(); ++i) {
        char c = field[i];
        unsigned digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else throw MalformedLine(lineno, "bad hex digit in '" + field + "'");
        value = value * 16 + digit;
    }
    return value;
}

std::uint8_t parse_octet(const std::string& field, std::size_t lineno) {
    if (field.size() != 4 || field[0] != '0' || (field[1] != 'x' && field[1] != 'X'))
        throw MalformedLine(lineno, "expected 0xNN octet, got '" + field + "'");
    unsigned value = 0;
    for (std::size_t i = 2; i < 4; ++i) {
        char c = field[i];
        unsigned digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else throw MalformedLine(lineno, "bad hex digit in '" + field + "'");
        value = value * 16 + digit;
    }
    return static_cast<std::uint8_t>(value);
}

}  // namespace

CodecTable CodecTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open codec table " + file.string());
    return from_stream(in);
}

CodecTable CodecTable::from_stream(std::istream& in) {
    CodecTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() < 2) throw MalformedLine(lineno, "expected octet<TAB>scalar(s)");
        std::uint8_t octet = parse_octet(fields[0], lineno);
        if (octet < 0x80) throw MalformedLine(lineno, "octet below 0x80 is reserved for ASCII");
        if (table.forward_[octet])
            throw MalformedLine(lineno, "octet mapped twice: " + fields[0]);

        Entry entry;
        std::string scalars = fields[1];
        std::size_t comma = scalars.find(',');
        entry.base = parse_scalar(comma == std::string::npos ? scalars : scalars.substr(0, comma),
                                  lineno);
        if (comma != std::string::npos)
            entry.composed = parse_scalar(scalars.substr(comma + 1), lineno);

        if (table.reverse_base_.count(entry.base))
            throw MalformedLine(lineno, "scalar mapped twice");
        table.reverse_base_[entry.base] = octet;
        if (entry.composed) {
            if (table.reverse_base_.count(entry.composed) ||
                table.reverse_composed_.count(entry.composed))
                throw MalformedLine(lineno, "composed scalar mapped twice");
            table.reverse_composed_[entry.composed] = octet;
        }
        if (entry.base == kCombiningNukta) table.nukta_byte_ = octet;
        table.forward_[octet] = entry;
        ++table.mapped_count_;
    }
    if (table.mapped_count_ > 0 && table.nukta_byte_ == 0)
        throw Error("codec table has no nukta row (U+093C)");
    // A composed scalar must not also be reachable as some base scalar,
    // otherwise byte round-trips break.
    for (const auto& [scalar, octet] : table.reverse_composed_) {
        if (table.reverse_base_.count(scalar))
            throw Error("codec table maps a scalar both directly and as a digraph");
    }
    return table;
}

bool CodecTable::composes_with_nukta(std::uint8_t byte) const {
    return forward_[byte] && forward_[byte]->composed != 0;
}

std::string CodecTable::decode(std::string_view bytes) const {
    std::string out;
    out.reserve(bytes.size() * 2);
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        std::uint8_t b = static_cast<std::uint8_t>(bytes[i]);
        if (b < 0x80) {
            out += static_cast<char>(b);
            ++i;
            continue;
        }
        const auto& entry = forward_[b];
        if (!entry) throw UnassignedByte(i, b);
        if (entry->composed && i + 1 < n &&
            static_cast<std::uint8_t>(bytes[i + 1]) == nukta_byte_) {
            utf8::append(out, entry->composed);
            i += 2;
            continue;
        }
        utf8::append(out, entry->base);
        ++i;
    }
    return out;
}

std::string CodecTable::encode(std::string_view text) const {
    std::string out;
    out.reserve(text.size());
    std::u32string scalars = utf8::decode(text);
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        char32_t cp = scalars[i];
        if (cp < 0x80) {
            out += static_cast<char>(cp);
            continue;
        }
        if (auto it = reverse_base_.find(cp); it != reverse_base_.end()) {
            out += static_cast<char>(it->second);
            continue;
        }
        if (auto it = reverse_composed_.find(cp); it != reverse_composed_.end()) {
            out += static_cast<char>(it->second);
            out += static_cast<char>(nukta_byte_);
            continue;
        }
        throw UnmappableScalar(i, cp);
    }
    return out;
}

std::string decode_iscii(std::string_view bytes, const CodecTable& table) {
    return table.decode(bytes);
}

std::string encode_iscii(std::string_view text, const CodecTable& table) {
    return table.encode(text);
}

}  // namespace clir::encoding
