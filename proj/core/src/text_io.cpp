#include "planeperm/text_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "planeperm/errors.hpp"

namespace planeperm {

std::vector<int> parse_int_sequence(std::string_view text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        int value = 0;
        auto token = text.substr(pos, end - pos);
        auto result = std::from_chars(token.data(), token.data() + token.size(), value);
        if (result.ec != std::errc() || result.ptr != token.data() + token.size())
            throw ParseError("not an integer: '" + std::string(token) + "'");
        out.push_back(value);
        pos = end;
    }
    if (out.empty()) throw ParseError("empty sequence");
    return out;
}

Permutation parse_one_line(std::string_view text, const GroundSet& g) {
    auto tokens = parse_int_sequence(text);
    if (static_cast<int>(tokens.size()) != g.size())
        throw ParseError("expected " + std::to_string(g.size()) + " values, got " +
                         std::to_string(tokens.size()));
    std::vector<char> seen(tokens.size(), 0);
    for (int x : tokens) {
        if (!g.contains(x))
            throw ParseError("value " + std::to_string(x) + " is outside the ground set");
        int idx = g.index_of(x);
        if (seen[idx]) throw ParseError("duplicate value " + std::to_string(x));
        seen[idx] = 1;
    }
    return Permutation::from_images(g, std::move(tokens));
}

std::string format_int_sequence(const std::vector<int>& values) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << ' ';
        out << values[i];
    }
    return out.str();
}

std::string format_one_line(const Permutation& pi) {
    return format_int_sequence(pi.images());
}

std::string format_cycles(const CycleStats& stats) {
    std::ostringstream out;
    for (const auto& cycle : stats.cycles) {
        out << '(';
        for (size_t i = 0; i < cycle.size(); ++i) {
            if (i) out << ',';
            out << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

std::string format_cycles(const Permutation& pi) {
    return format_cycles(cycle_stats(pi));
}

}  // namespace planeperm
