#ifndef CHARCONVO_RECORD_IO_HPP
#define CHARCONVO_RECORD_IO_HPP

#include <optional>
#include <string>

#include "charconvo/charcode.hpp"
#include "charconvo/convo.hpp"

namespace charconvo {

// Record document: provenance and parameters as "key value" lines, slice row
// ranges, and the generator in the polynomial-matrix text format (absent for
// dual records). An optional verification section is informational and
// ignored on load.
std::string record_to_text(const ConvRecord& rec);
std::string record_to_text(const ConvRecord& rec, const VerifyReport& report);

// Parsed view of a record document. The matrices are not stored in the file;
// they are rebuilt from the provenance, and the stored generator text is kept
// for comparison against the rebuilt one.
struct ParsedRecord {
    Provenance prov;
    BoundKind bound = BoundKind::primal;
    int n = 0, k = 0;
    long long delta = 0;
    std::optional<int> memory;
    long long df_lower = 0;
    int kappa = 0;
    std::vector<std::pair<int, int>> slice_ranges;
    std::optional<std::string> generator_text;
};
ParsedRecord record_from_text(const std::string& text);

// Character-code document: parameters, designed triple, H and G in the
// matrix text format.
std::string charcode_to_text(const CharCode& c);
struct ParsedCharCode {
    std::uint32_t q = 0;
    int l = 0, m = 0, r = 0;
    int n = 0, k = 0;
    long long d = 0;
    MatrixFq H;
    MatrixFq G;
};
ParsedCharCode charcode_from_text(const std::string& text);

}  // namespace charconvo

#endif
