#ifndef CHARCONVO_PUBLISHED_HPP
#define CHARCONVO_PUBLISHED_HPP

#include <optional>
#include <string>
#include <vector>

#include "charconvo/convo.hpp"
#include "charconvo/report.hpp"

namespace charconvo {

// One row of the published comparison table. The first column is recomputed
// from the construction formulas; the second column lists codes from earlier
// work and is reference text only, never recomputed.
struct PublishedRow {
    int section_q = 0;    // which q block of the table the row sits in
    int printed_q = 0;    // subscript actually printed on the row
    std::string family;   // "t2" or "cor1"
    int m = 0, r = 0, u = 0;
    int pn = 0, pk = 0;
    long long pdelta = 0;
    bool mu_known = false;  // unit-memory rows print mu = 1, dual rows print the symbol
    long long pdf = 0;
    std::string printed;
    std::string reference;
    std::string note;  // editorial anomalies in the published row, if any
};

const std::vector<PublishedRow>& published_rows();

struct RowComparison {
    const PublishedRow* row = nullptr;
    int cn = 0, ck = 0;
    long long cdelta = 0;
    std::optional<int> cmu;
    long long cdf = 0;
    bool match = false;
    std::string computed_str;
};

RowComparison recompute_row(const PublishedRow& row);
std::vector<RowComparison> recompute_table();

// Values printed in the published worked examples (outside the table), keyed
// by construction provenance. Used to annotate construction reports.
struct PublishedExample {
    std::string family;
    int q = 0, m = 0, r = 0, u = 0;
    int pn = 0, pk = 0;
    long long pdelta = 0;
    long long pdf = 0;
    std::string locus;
};

std::optional<PublishedExample> published_example_for(const Provenance& prov, BoundKind bound);

// Annotations comparing a record's computed parameters against published
// example values, empty when no published example covers the tuple.
std::vector<Annotation> published_annotations(const ConvRecord& rec);

}  // namespace charconvo

#endif
