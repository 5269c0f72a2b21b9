#ifndef CHARCONVO_REPORT_HPP
#define CHARCONVO_REPORT_HPP

#include <string>
#include <vector>

namespace charconvo {

// A computed-vs-published annotation. Mismatches are findings, not failures.
struct Annotation {
    std::string subject;    // what is being compared, e.g. "dimension k"
    std::string computed;
    std::string published;
    std::string locus;      // where the published value appears
    bool agrees = false;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct KeyValue {
    std::string key;
    std::string value;
};

// Structured command output: echo, parameters, results, checks, annotations.
struct RunReport {
    std::string command;
    std::vector<KeyValue> fields;
    std::vector<CheckResult> checks;
    std::vector<Annotation> annotations;
    std::vector<std::string> lines;  // preformatted body (tables etc.)

    bool all_checks_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string key, std::string value) { fields.push_back({std::move(key), std::move(value)}); }
};

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);

}  // namespace charconvo

#endif
