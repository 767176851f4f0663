#include "bioc/translit.hpp"

#include <algorithm>
#include <fstream>

#include "bioc/error.hpp"
#include "bioc/utf8.hpp"
#include "translit_data.hpp"

namespace bioc::translit {

namespace {

const char* lookup(const detail::FoldEntry* table, std::size_t count, char32_t cp) {
    const detail::FoldEntry* end = table + count;
    const detail::FoldEntry* it = std::lower_bound(
        table, end, cp,
        [](const detail::FoldEntry& e, char32_t value) { return e.code_point < value; });
    if (it != end && it->code_point == cp)
        return it->replacement;
    return nullptr;
}

} // namespace

const TranslitTable& TranslitTable::builtin() {
    static const TranslitTable table = [] {
        TranslitTable t;
        for (std::size_t i = 0; i < detail::kExplicitCount; ++i)
            t.set(detail::kExplicit[i].code_point, detail::kExplicit[i].replacement);
        return t;
    }();
    return table;
}

TranslitTable TranslitTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Error::Kind::ArchiveUnreadable,
                    "cannot open transliteration table " + path.string());

    TranslitTable table = builtin();
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        const std::size_t tab = line.find('\t');
        if (line.size() < 3 || line.compare(0, 2, "U+") != 0 || tab == std::string::npos ||
            tab < 3)
            throw Error(Error::Kind::Parse, path.string() + ":" + std::to_string(line_number) +
                                                ": expected U+XXXX<TAB>replacement");
        char32_t cp = 0;
        for (std::size_t i = 2; i < tab; ++i) {
            const char c = line[i];
            int digit;
            if (c >= '0' && c <= '9')
                digit = c - '0';
            else if (c >= 'a' && c <= 'f')
                digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                digit = c - 'A' + 10;
            else
                throw Error(Error::Kind::Parse, path.string() + ":" +
                                                    std::to_string(line_number) +
                                                    ": bad code point");
            cp = cp * 16 + static_cast<char32_t>(digit);
        }
        table.set(cp, line.substr(tab + 1));
    }
    return table;
}

void TranslitTable::set(char32_t code_point, std::string replacement) {
    if (!utf8::is_ascii(replacement))
        throw Error(Error::Kind::Parse, "transliteration replacement is not ASCII");
    entries_[code_point] = std::move(replacement);
}

const std::string* TranslitTable::find(char32_t code_point) const {
    auto it = entries_.find(code_point);
    return it == entries_.end() ? nullptr : &it->second;
}

std::string to_ascii(std::string_view text) { return to_ascii(text, TranslitTable::builtin()); }

std::string to_ascii(std::string_view text, const TranslitTable& table) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = utf8::decode_next(text, pos);
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (const std::string* replacement = table.find(cp)) {
            out += *replacement;
        } else if (const char* folded = lookup(detail::kFold, detail::kFoldCount, cp)) {
            out += folded;
        } else {
            out.push_back('?');
        }
    }
    return out;
}

} // namespace bioc::translit
