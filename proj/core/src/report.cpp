#include "charconvo/report.hpp"

#include <sstream>

#include <json.hpp>

namespace charconvo {

std::string render_text(const RunReport& r) {
    std::ostringstream os;
    os << "command: " << r.command << '\n';
    for (const KeyValue& kv : r.fields) os << kv.key << ": " << kv.value << '\n';
    for (const std::string& line : r.lines) os << line << '\n';
    if (!r.checks.empty()) {
        os << "checks:\n";
        for (const CheckResult& c : r.checks) {
            os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) os << " -- " << c.detail;
            os << '\n';
        }
    }
    if (!r.annotations.empty()) {
        os << "annotations:\n";
        for (const Annotation& a : r.annotations) {
            os << "  " << (a.agrees ? "[agrees]  " : "[mismatch]") << ' ' << a.subject << ": computed "
               << a.computed << ", published " << a.published << " (" << a.locus << ")\n";
        }
    }
    return os.str();
}

std::string render_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
    for (const KeyValue& kv : r.fields) fields[kv.key] = kv.value;
    j["fields"] = fields;
    j["lines"] = r.lines;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    nlohmann::ordered_json notes = nlohmann::ordered_json::array();
    for (const Annotation& a : r.annotations)
        notes.push_back({{"subject", a.subject},
                         {"computed", a.computed},
                         {"published", a.published},
                         {"locus", a.locus},
                         {"agrees", a.agrees}});
    j["annotations"] = notes;
    j["all_checks_pass"] = r.all_checks_pass();
    return j.dump(2) + "\n";
}

}  // namespace charconvo
