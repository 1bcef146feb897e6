#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace planeperm {

// One labelled result with a note on how it was obtained ("exact
// block-interchange distance (n+1-C)/2", "breadth-first search over
// reversal moves", ...).
struct ReportItem {
    std::string key;
    nlohmann::ordered_json value;
    std::string provenance;

    bool operator==(const ReportItem&) const = default;
};

// Everything a command emits: the command path, its parsed input, and the
// computed items in order. No timestamps, so equal inputs (and seeds)
// produce byte-identical machine output. Counts that may exceed 64 bits are
// stored as decimal strings.
struct Report {
    std::string command;
    nlohmann::ordered_json input;
    std::vector<ReportItem> items;

    nlohmann::ordered_json to_machine() const;
    static Report from_machine(const nlohmann::ordered_json& j);

    bool operator==(const Report&) const = default;
};

// "<key> = <value>  [<provenance>]" per item; bare strings and flat arrays
// are rendered without JSON punctuation.
std::string to_text(const Report& report);

}  // namespace planeperm
