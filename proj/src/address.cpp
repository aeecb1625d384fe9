#include "gracelab/address.hpp"

#include <charconv>
#include <vector>

#include "gracelab/errors.hpp"

namespace gracelab {

char side_char(Side s) {
    switch (s) {
        case Side::U: return 'U';
        case Side::V: return 'V';
        case Side::Center: return 'C';
    }
    return '?';
}

Side side_from_char(char c) {
    switch (c) {
        case 'U': return Side::U;
        case 'V': return Side::V;
        case 'C': return Side::Center;
        default: throw ParseError(std::string("unknown side '") + c + "'");
    }
}

namespace {

std::string field(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "-";
}

std::optional<int> parse_field(const std::string& tok) {
    if (tok == "-") return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad address field '" + tok + "'");
    return value;
}

}  // namespace

std::string VertexAddress::to_string() const {
    return field(branch) + "/" + field(copy) + "/" + side_char(side) + "/" + std::to_string(index);
}

VertexAddress VertexAddress::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto slash = text.find('/', start);
        if (slash == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, slash - start));
        start = slash + 1;
    }
    if (parts.size() != 4)
        throw ParseError("bad vertex address '" + text + "' (want branch/copy/side/index)");
    if (parts[2].size() != 1)
        throw ParseError("bad side in address '" + text + "'");
    auto index = parse_field(parts[3]);
    if (!index) throw ParseError("address index must be a number in '" + text + "'");
    return {parse_field(parts[0]), parse_field(parts[1]), side_from_char(parts[2][0]), *index};
}

}  // namespace gracelab
