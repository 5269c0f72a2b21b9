#ifndef CHARCONVO_CHARCODE_HPP
#define CHARCONVO_CHARCODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charconvo/field.hpp"
#include "charconvo/matrix.hpp"

namespace charconvo {

// A point of Z_l^m together with its coordinate sum (taken as an ordinary
// integer). Point index i corresponds to the l-adic digits of i, least
// significant digit first.
struct GroupPoint {
    int l = 0;
    int m = 0;
    int index = 0;
    std::vector<int> coords;
    int weight = 0;
};

// Partial binomial sum: sum of C(m, i) for i = 0..r.
long long weight_partial_sum_binary(int m, int r);

// Number of points of Z_l^m with coordinate sum exactly i, by the
// inclusion-exclusion formula; C(a, b) = 0 when a < b or b < 0.
long long weight_count(int m, int i, int l);

// Number of points of Z_l^m with coordinate sum at most r.
long long weight_partial_sum(int m, int r, int l);

std::vector<GroupPoint> enumerate_group(int l, int m);

// Character value gamma_idx(arg) = xi^(sum idx_k * arg_k mod l), where xi has
// multiplicative order l.
std::uint32_t character_value(const Field& f, std::uint32_t xi, const GroupPoint& index_point,
                              const GroupPoint& arg_point);

// Decomposition r = a*(l-1) + b with 0 <= b <= l-2.
struct RadixSplit {
    int a = 0;
    int b = 0;
};
RadixSplit split_r(int r, int l);

// Designed minimum distance of the code with defining-set threshold r:
// (l - b) * l^(m-1-a). For l = 2 this is 2^(m-r).
long long designed_distance(int l, int m, int r);

// A group character code over Z_l^m: codewords are the vectors orthogonal to
// every character row indexed by a group point of coordinate sum > r. Rows of
// H are ordered by strictly descending coordinate sum, ascending point index
// within a sum class; columns by character index 0..l^m-1. G is the kernel
// basis of H.
struct CharCode {
    Field field;
    int l = 0;
    int m = 0;
    int r = 0;
    std::uint32_t xi = 0;
    MatrixFq H;
    MatrixFq G;
    int n = 0;
    int k = 0;
    long long d = 0;  // designed distance

    // Row counts of H grouped by descending coordinate sum, i.e. one entry
    // per weight class w = m(l-1) ... r+1.
    std::vector<int> weight_class_sizes;
};

inline constexpr long long group_size_guard = 1 << 14;

CharCode build_char_code(const Field& f, int l, int m, int r);

// The reflection partner with threshold m(l-1)-1-r; the code whose weight
// distribution matches the dual of the (l, m, r) code.
CharCode dual_reference_code(const Field& f, int l, int m, int r);

}  // namespace charconvo

#endif
