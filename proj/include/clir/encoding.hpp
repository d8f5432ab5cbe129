#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace clir::encoding {

/// Byte-exact ISCII-91 (Devanagari block) <-> UTF-8 codec.
///
/// The mapping ships as a data file so it can be audited against the
/// published standard assignment, one row per octet:
///
///     0xNN<TAB>U+XXXX[,U+YYYY]<TAB>comment
///
/// U+XXXX is the octet's base scalar. The optional U+YYYY is the scalar the
/// octet produces when followed by the nukta octet (the digraph's composed
/// form, e.g. 0xB3 ka -> U+0958 qa). Lines starting with '#' are ignored.
///
/// Decoding leaves ASCII (< 0x80) untouched, composes nukta digraphs into
/// their precomposed scalars, and emits a standalone combining nukta when
/// the nukta octet follows a byte with no composed form. Unassigned octets,
/// including the ATR/EXT control bytes, raise UnassignedByte. Encoding
/// inverts all of this; encode(decode(bytes)) == bytes for every valid
/// stream.
class CodecTable {
public:
    static CodecTable load(const std::filesystem::path& file);
    static CodecTable from_stream(std::istream& in);

    /// ISCII byte stream -> UTF-8 text. Throws UnassignedByte.
    std::string decode(std::string_view bytes) const;

    /// UTF-8 text -> ISCII byte stream. Throws UnmappableScalar. Input is
    /// expected in composed form: a base+combining-nukta pair that has a
    /// precomposed scalar encodes to the same bytes as that scalar, so it
    /// decodes back precomposed.
    std::string encode(std::string_view text) const;

    std::size_t size() const { return mapped_count_; }
    std::uint8_t nukta_byte() const { return nukta_byte_; }

    /// True when (byte, nukta) forms a composing digraph.
    bool composes_with_nukta(std::uint8_t byte) const;

private:
    struct Entry {
        char32_t base = 0;
        char32_t composed = 0;  // 0 = no digraph for this octet
    };

    std::array<std::optional<Entry>, 256> forward_{};
    std::unordered_map<char32_t, std::uint8_t> reverse_base_;
    std::unordered_map<char32_t, std::uint8_t> reverse_composed_;
    std::uint8_t nukta_byte_ = 0;
    std::size_t mapped_count_ = 0;
};

std::string decode_iscii(std::string_view bytes, const CodecTable& table);
std::string encode_iscii(std::string_view text, const CodecTable& table);

}  // namespace clir::encoding
