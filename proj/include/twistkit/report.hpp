#pragma once

#include <string>
#include <vector>

namespace twistkit {

/// One named condition with outcome and an optional printed witness.
struct ReportItem {
    std::string name;
    bool pass = true;
    std::string witness;  // offending value or computed quantity, pretty-printed
};

struct ValidationReport {
    std::vector<ReportItem> items;

    bool ok() const {
        for (const auto& item : items) {
            if (!item.pass) return false;
        }
        return true;
    }

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        items.push_back({name, pass, witness});
    }

    std::string summary() const {
        std::string out;
        for (const auto& item : items) {
            out += item.name;
            out += item.pass ? ": pass" : ": FAIL";
            if (!item.witness.empty()) out += " [" + item.witness + "]";
            out += "\n";
        }
        return out;
    }
};

}  // namespace twistkit
