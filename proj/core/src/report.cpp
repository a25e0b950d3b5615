#include "gradedres/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace gradedres {

std::string render_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const CheckRecord& rec : report.records) {
        os << "check " << rec.check << " on " << rec.target << ": " << rec.verdict;
        if (!rec.reason.empty()) os << " (" << rec.reason << ")";
        os << "\n";
        for (const auto& [key, value] : rec.data)
            os << "  " << key << " = " << value << "\n";
    }
    return os.str();
}

std::string render_machine(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& rec : report.records) {
        nlohmann::ordered_json entry;
        entry["check"] = rec.check;
        entry["target"] = rec.target;
        entry["verdict"] = rec.verdict;
        if (!rec.reason.empty()) entry["reason"] = rec.reason;
        nlohmann::ordered_json data = nlohmann::ordered_json::object();
        for (const auto& [key, value] : rec.data) data[key] = value;
        entry["data"] = std::move(data);
        doc["checks"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace gradedres
