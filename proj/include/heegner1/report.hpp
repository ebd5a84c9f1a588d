#ifndef HEEGNER1_REPORT_HPP
#define HEEGNER1_REPORT_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace heegner1 {

enum class Verdict { verified, falsified, inconclusive };

inline std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::falsified: return "falsified";
        default: return "inconclusive";
    }
}

struct ReportItem {
    std::string layer;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    Verdict verdict = Verdict::inconclusive;
    long maxMatchErrorExp = 0; // log2 bound over all numeric matches
    std::vector<ReportItem> details;

    void add(const std::string& layer, const std::string& name, bool pass, const std::string& detail = "") {
        details.push_back({layer, name, pass, detail});
    }
    bool allPassed() const {
        for (auto& d : details)
            if (!d.pass) return false;
        return true;
    }
    nlohmann::json toJson() const {
        nlohmann::json items = nlohmann::json::array();
        for (auto& d : details)
            items.push_back({{"layer", d.layer}, {"name", d.name}, {"pass", d.pass}, {"detail", d.detail}});
        return {{"verdict", verdictName(verdict)},
                {"maxMatchError", maxMatchErrorExp},
                {"details", items}};
    }
};

} // namespace heegner1

#endif
