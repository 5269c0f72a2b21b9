#ifndef CHARCONVO_CONVO_HPP
#define CHARCONVO_CONVO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charconvo/charcode.hpp"
#include "charconvo/matrix.hpp"
#include "charconvo/polymat.hpp"
#include "charconvo/report.hpp"

namespace charconvo {

enum class BoundKind { primal, dual };

// Which construction produced a record. Unit-memory families are "t2"
// (binary) and "t4" (order-l groups); "t3" is the two-memory binary family,
// "cor1" the dual certificate of a t2 record, "multi" the general weight-cut
// form.
struct Provenance {
    std::string theorem;
    int q = 0;
    int l = 2;
    int m = 0;
    int r = 0;
    int u = 0;
    std::optional<int> v;
    std::vector<int> cuts;  // descending weight thresholds, last = r
};

// A constructed convolutional code: generator, parameters, distance-bound
// certificate and the split bookkeeping. Dual records carry parameters only
// (no generator is constructed for the dual code).
struct ConvRecord {
    explicit ConvRecord(Field f) : field(std::move(f)) {}

    Provenance prov;
    Field field;
    BoundKind bound = BoundKind::primal;
    int n = 0;
    int k = 0;
    long long delta = 0;
    std::optional<int> memory;  // absent = unknown (dual records)
    long long df_lower = 0;
    int kappa = 0;
    std::vector<std::pair<int, int>> slice_ranges;  // [begin, end) rows of H
    std::optional<MatrixFq> H;                      // full split parity-check matrix
    std::optional<PolyMatrix> G;
    std::vector<Annotation> annotations;
};

// Designed parameters by pure arithmetic, no matrices. Also evaluates the
// rank precondition, both in the corrected form (weight range up to m(l-1))
// and in the as-published form for order-l groups (upper limit m).
struct DesignedTuple {
    std::string theorem;
    int q = 0, l = 2, m = 0, r = 0, u = 0;
    std::optional<int> v;
    std::vector<int> cuts;
    int n = 0;
    int k = 0;
    long long delta = 0;
    std::optional<int> memory;
    long long df_lower = 0;
    long long condition_lhs = 0;  // rows of the constant slice
    long long condition_rhs = 0;  // max rows among the D^i slices, i >= 1
    std::optional<bool> published_condition;  // literal upper-limit-m form (l >= 3 only)
    std::optional<long long> published_delta; // two-memory degree as published, when it differs
};

DesignedTuple params_for(const std::string& theorem, int q, int l, int m, int r, int u,
                         std::optional<int> v = std::nullopt,
                         const std::vector<int>& cuts = {});

// Contiguous top-to-bottom slices of H; the counts must partition its rows.
std::vector<MatrixFq> split_parity_check(const MatrixFq& h, const std::vector<int>& row_counts);

// G(D) = sum of bottom-padded slices times D^i. Requires the first slice to
// have full row rank kappa and every later slice rank (and row count) at
// most kappa.
PolyMatrix assemble_generator(const std::vector<MatrixFq>& slices);

ConvRecord construct_unit_memory_binary(int q, int m, int r, int u);
ConvRecord construct_two_memory_binary(int q, int m, int r, int v, int u);
ConvRecord construct_unit_memory_lary(int q, int l, int m, int r, int u);

// Slices are the weight bands above cuts[0], then (cuts[i], cuts[i-1]].
// With two cuts this is exactly the unit-memory construction, with three the
// two-memory one; the provenance label follows suit when the corresponding
// preconditions hold.
ConvRecord construct_multi_memory(int q, int l, int m, const std::vector<int>& cuts);

// Parameter certificate for the dual of a unit-memory binary record.
ConvRecord dual_record(const ConvRecord& rec);

ConvRecord construct_from_provenance(const Provenance& prov);

struct SearchBudget;  // distance.hpp

// Structural verification: rank conditions, parameters against the
// provenance formulas, basicness with a checked right inverse, reducedness,
// bound certification, and window orthogonality for dual records.
struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<Annotation> annotations;
    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};
VerifyReport verify_record(const ConvRecord& rec);
VerifyReport verify_record(const ConvRecord& rec, const SearchBudget& budget, bool certify = true);

}  // namespace charconvo

#endif
