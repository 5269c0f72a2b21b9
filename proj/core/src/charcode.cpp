#include "charconvo/charcode.hpp"

#include <stdexcept>

#include "charconvo/errors.hpp"

namespace charconvo {

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

long long weight_partial_sum_binary(int m, int r) {
    if (m < 1) throw parameter_error("m must be >= 1");
    if (r < 0 || r > m) throw parameter_error("partial-sum bound out of range [0, m]");
    long long s = 0;
    for (int i = 0; i <= r; ++i) s += binom(m, i);
    return s;
}

long long weight_count(int m, int i, int l) {
    if (m < 1 || l < 2) throw parameter_error("need m >= 1 and l >= 2");
    if (i < 0 || i > m * (l - 1)) throw parameter_error("coordinate sum out of range [0, m(l-1)]");
    long long s = 0;
    for (int k = 0; k <= m; ++k) {
        long long term = binom(m, k) * binom(m - 1 + i - static_cast<long long>(k) * l, m - 1);
        s += (k % 2 == 0) ? term : -term;
    }
    return s;
}

long long weight_partial_sum(int m, int r, int l) {
    if (r < 0 || r > m * (l - 1)) throw parameter_error("partial-sum bound out of range [0, m(l-1)]");
    long long s = 0;
    for (int i = 0; i <= r; ++i) s += weight_count(m, i, l);
    return s;
}

std::vector<GroupPoint> enumerate_group(int l, int m) {
    if (l < 2 || m < 1) throw parameter_error("need l >= 2 and m >= 1");
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= l;
        if (n > group_size_guard) throw parameter_error("group size exceeds the 2^14 guard");
    }
    std::vector<GroupPoint> pts(static_cast<std::size_t>(n));
    for (long long idx = 0; idx < n; ++idx) {
        GroupPoint& p = pts[static_cast<std::size_t>(idx)];
        p.l = l;
        p.m = m;
        p.index = static_cast<int>(idx);
        p.coords.resize(m);
        long long t = idx;
        int w = 0;
        for (int j = 0; j < m; ++j) {
            p.coords[j] = static_cast<int>(t % l);
            w += p.coords[j];
            t /= l;
        }
        p.weight = w;
    }
    return pts;
}

std::uint32_t character_value(const Field& f, std::uint32_t xi, const GroupPoint& index_point,
                              const GroupPoint& arg_point) {
    if (index_point.l != arg_point.l || index_point.m != arg_point.m)
        throw parameter_error("points from different groups");
    const int l = index_point.l;
    if (f.pow(xi, l) != 1 || (l > 1 && f.multiplicative_order(xi) != l))
        throw parameter_error("xi does not have order l");
    long long e = 0;
    for (int j = 0; j < index_point.m; ++j) e += static_cast<long long>(index_point.coords[j]) * arg_point.coords[j];
    return f.pow(xi, e % l);
}

RadixSplit split_r(int r, int l) {
    if (r < 0) throw parameter_error("threshold must be >= 0");
    RadixSplit s;
    s.a = r / (l - 1);
    s.b = r % (l - 1);
    return s;
}

long long designed_distance(int l, int m, int r) {
    RadixSplit s = split_r(r, l);
    long long d = l - s.b;
    for (int i = 0; i < m - 1 - s.a; ++i) d *= l;
    return d;
}

CharCode build_char_code(const Field& f, int l, int m, int r) {
    if (l < 2) throw parameter_error("l must be >= 2");
    if (m < 1) throw parameter_error("m must be >= 1");
    if ((f.q() - 1) % static_cast<std::uint32_t>(l) != 0)
        throw parameter_error("l must divide q-1 (no root of unity of order " + std::to_string(l) + ")");
    const int wmax = m * (l - 1);
    if (r < 0 || r >= wmax) throw parameter_error("threshold r out of range [0, m(l-1))");

    std::vector<GroupPoint> pts = enumerate_group(l, m);
    const int n = static_cast<int>(pts.size());

    std::uint32_t xi = f.root_of_unity(l);
    std::vector<std::uint32_t> xi_pow(l);
    for (int i = 0; i < l; ++i) xi_pow[i] = f.pow(xi, i);

    // Rows: points of coordinate sum > r, grouped by strictly descending sum,
    // ascending index inside a class. This makes the threshold-u matrix a
    // literal top block of the threshold-r matrix for any u > r.
    std::vector<const GroupPoint*> row_pts;
    std::vector<int> class_sizes;
    for (int w = wmax; w > r; --w) {
        int count = 0;
        for (const GroupPoint& p : pts)
            if (p.weight == w) {
                row_pts.push_back(&p);
                ++count;
            }
        class_sizes.push_back(count);
    }

    std::vector<std::uint32_t> entries;
    entries.reserve(row_pts.size() * static_cast<std::size_t>(n));
    for (const GroupPoint* x : row_pts) {
        for (int j = 0; j < n; ++j) {
            long long e = 0;
            int t = j;
            for (int c = 0; c < m; ++c) {
                e += static_cast<long long>(t % l) * x->coords[c];
                t /= l;
            }
            entries.push_back(xi_pow[e % l]);
        }
    }
    MatrixFq H(f, row_pts.size(), static_cast<std::size_t>(n), std::move(entries));
    MatrixFq G = kernel_basis(H);

    const long long k = n - static_cast<long long>(row_pts.size());
    if (static_cast<long long>(G.rows()) != k)
        throw std::logic_error("character rows not independent; kernel dimension mismatch");
    if (weight_partial_sum(m, r, l) != k) throw std::logic_error("weight census disagrees with row count");

    CharCode c{f, l, m, r, xi, std::move(H), std::move(G), n, static_cast<int>(k), designed_distance(l, m, r),
               std::move(class_sizes)};
    return c;
}

CharCode dual_reference_code(const Field& f, int l, int m, int r) {
    const int reflected = m * (l - 1) - 1 - r;
    if (reflected < 0 || reflected >= m * (l - 1))
        throw parameter_error("reflected threshold out of range");
    return build_char_code(f, l, m, reflected);
}

}  // namespace charconvo
