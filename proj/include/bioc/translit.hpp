#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace bioc::translit {

// Explicit code point -> ASCII replacement mappings, consulted before the
// compatibility-decomposition fallback. Replacements must be pure ASCII.
class TranslitTable {
public:
    // The built-in mapping: typographic punctuation, Greek letters spelled
    // out ("alpha"), and a handful of common symbols.
    static const TranslitTable& builtin();

    // Reads an override file, one mapping per line: `U+XXXX<TAB>replacement`.
    // Entries start from the built-in table and replace or extend it. Blank
    // lines and lines starting with '#' are skipped.
    static TranslitTable load(const std::filesystem::path& path);

    void set(char32_t code_point, std::string replacement);
    const std::string* find(char32_t code_point) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<char32_t, std::string> entries_;
};

// Unicode -> ASCII translation. Per code point: ASCII passes through, then
// the explicit table, then compatibility decomposition with combining marks
// dropped (keeping the ASCII that remains), then "?". Total and idempotent;
// the output never contains a byte >= 0x80.
std::string to_ascii(std::string_view text);
std::string to_ascii(std::string_view text, const TranslitTable& table);

} // namespace bioc::translit
