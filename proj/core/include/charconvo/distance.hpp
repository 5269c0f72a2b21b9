#ifndef CHARCONVO_DISTANCE_HPP
#define CHARCONVO_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charconvo/charcode.hpp"
#include "charconvo/convo.hpp"
#include "charconvo/matrix.hpp"
#include "charconvo/polymat.hpp"

namespace charconvo {

// Explicit enumeration budgets. Every oracle checks its budget up front or
// counts work as it goes; exceeding a budget raises budget_error, never a
// silent wrong answer.
struct SearchBudget {
    long long codewords = 10'000'000;
    long long column_subsets = 10'000'000;
    long long search_nodes = 1'000'000;
};

enum class DistanceMethod { enumeration, dependent_columns, trellis_search };

const char* method_name(DistanceMethod m);

struct DistanceResult {
    long long value = 0;
    // For enumeration and dependent-column searches, exact means the true
    // minimum distance. A trellis search only explores inputs up to its caps;
    // its value is an upper witness and is never flagged exact.
    bool exact = false;
    DistanceMethod method = DistanceMethod::enumeration;
    std::optional<long long> weight_cap;
    std::optional<int> degree_cap;
};

// Exact minimum weight by enumerating all q^k messages. Requires q^k within
// the codeword budget; rows of g must be linearly independent.
DistanceResult min_distance_enumeration(const MatrixFq& g, const SearchBudget& budget = {});

// Smallest linearly dependent column set of h, sizes 1..w_cap in
// lexicographic order. Exact when a dependent set is found; otherwise the
// result is the certified lower bound value = w_cap + 1 ("d > w_cap") with
// exact = false.
DistanceResult min_dependent_columns(const MatrixFq& h, int w_cap, const SearchBudget& budget = {});

// Full weight distribution by message enumeration (q^k within budget).
std::vector<unsigned long long> weight_distribution(const MatrixFq& g, const SearchBudget& budget = {});

// Weight distribution of the dual code from the distribution of the code.
std::vector<unsigned long long> macwilliams_dual_distribution(const std::vector<unsigned long long>& wd,
                                                              int n, std::uint32_t q);

// Exact distance of the dual of a code given by generator g / parity check h,
// obtained by enumerating the (small) code itself and transforming its weight
// distribution. Requires q^rows(g) within budget and n <= 64.
DistanceResult dual_distance_via_enumeration(const MatrixFq& g, const SearchBudget& budget = {});

// Exact minimum distance of the code with generator g and parity check h,
// choosing deterministically among the exact oracles: message enumeration,
// then dependent-column search on h, then dual-side enumeration.
DistanceResult exact_min_distance(const MatrixFq& g, const MatrixFq& h, const SearchBudget& budget = {});

// Depth-first branch-and-bound over nonzero message polynomials of degree at
// most degree_cap, pruning on the weight of finalized output blocks. Returns
// the lightest codeword found (an upper witness for the free distance).
// Raises budget_error("no witness ...") if nothing at or below weight_cap was
// found within the node budget.
DistanceResult free_distance_search(const PolyMatrix& g, long long weight_cap, int degree_cap,
                                    const SearchBudget& budget = {});

enum class CertifyStatus { certified, uncertified, mismatch };

struct CertifyReport {
    CertifyStatus status = CertifyStatus::uncertified;
    long long designed = 0;                 // the bound value the record claims
    std::optional<long long> computed;      // oracle value when a route ran
    std::string route;                      // which oracle certified, or "formula-only"
    std::vector<std::string> evidence;      // downscale checks when uncertified
    std::string detail;
};

// Certify the distance bound of a record. Primal records: the designed bound
// is the dual distance of the threshold-r block code; verified exactly when
// an oracle route fits the budget, otherwise checked on smaller group sizes
// and reported formula-only. Dual records: same policy for the distance of
// the threshold-u block code, certifying the chain d_f >= d_0 + 1.
CertifyReport certify_bound(const ConvRecord& rec, const SearchBudget& budget = {});

}  // namespace charconvo

#endif
