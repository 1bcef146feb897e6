#include "planeperm/report.hpp"

#include <sstream>

namespace planeperm {

nlohmann::ordered_json Report::to_machine() const {
    nlohmann::ordered_json item_list = nlohmann::ordered_json::array();
    for (const ReportItem& item : items) {
        item_list.push_back(nlohmann::ordered_json{
            {"key", item.key}, {"value", item.value}, {"provenance", item.provenance}});
    }
    return nlohmann::ordered_json{{"command", command}, {"input", input}, {"items", item_list}};
}

Report Report::from_machine(const nlohmann::ordered_json& j) {
    Report report;
    report.command = j.at("command").get<std::string>();
    report.input = j.at("input");
    for (const auto& item : j.at("items")) {
        report.items.push_back(ReportItem{item.at("key").get<std::string>(), item.at("value"),
                                          item.at("provenance").get<std::string>()});
    }
    return report;
}

namespace {

std::string render_scalar(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string render_value(const nlohmann::ordered_json& v) {
    if (v.is_array()) {
        bool flat = true;
        for (const auto& entry : v)
            if (entry.is_array() || entry.is_object()) flat = false;
        if (flat) {
            std::ostringstream out;
            bool first = true;
            for (const auto& entry : v) {
                if (!first) out << " ";
                first = false;
                out << render_scalar(entry);
            }
            return out.str();
        }
    }
    if (v.is_array() || v.is_object()) return v.dump();
    return render_scalar(v);
}

}  // namespace

std::string to_text(const Report& report) {
    std::ostringstream out;
    for (const ReportItem& item : report.items) {
        out << item.key << " = " << render_value(item.value);
        if (!item.provenance.empty()) out << "  [" << item.provenance << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace planeperm
