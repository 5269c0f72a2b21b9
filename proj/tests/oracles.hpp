#ifndef CHARCONVO_TEST_ORACLES_HPP
#define CHARCONVO_TEST_ORACLES_HPP

// Independent reference implementations used only by tests. These repeat the
// work of the library with different algorithms and data layouts so that a
// bug in the library is unlikely to be mirrored here.

#include <cstdint>
#include <map>
#include <vector>

#include "charconvo/field.hpp"
#include "charconvo/poly.hpp"
#include "charconvo/polymat.hpp"

namespace oracles {

// Schoolbook product of two coefficient vectors over Z_p reduced modulo a
// monic modulus, everything in plain ints.
inline std::vector<int> polymul_mod(std::vector<int> a, std::vector<int> b, const std::vector<int>& mod, int p) {
    int e = static_cast<int>(mod.size()) - 1;
    std::vector<int> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + 1ll * a[i] * b[j]) % p);
    for (int d = static_cast<int>(prod.size()) - 1; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int t = 0; t <= e; ++t) {
            int idx = d - e + t;
            prod[idx] = ((prod[idx] - c * mod[t]) % p + p) % p;
        }
    }
    prod.resize(e);
    return prod;
}

// Exhaustive census of coordinate sums over Z_l^m.
inline std::map<int, long long> weight_census(int l, int m) {
    std::map<int, long long> census;
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= l;
    for (long long x = 0; x < total; ++x) {
        long long t = x;
        int w = 0;
        for (int i = 0; i < m; ++i) {
            w += static_cast<int>(t % l);
            t /= l;
        }
        ++census[w];
    }
    return census;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<long long>> tri(n + 1, std::vector<long long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        tri[i][0] = 1;
        for (int j = 1; j <= i; ++j) tri[i][j] = tri[i - 1][j - 1] + (j <= i - 1 ? tri[i - 1][j] : 0);
    }
    return tri[n][k];
}

// Naive convolution encoder: v_j(D) = sum_i u_i(D) g_ij(D) with explicit
// index arithmetic, no shared code with the library's encode.
inline std::vector<charconvo::Poly> convolve(const charconvo::Field& f,
                                             const std::vector<charconvo::Poly>& u,
                                             const charconvo::PolyMatrix& g) {
    std::vector<charconvo::Poly> v(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        std::size_t maxlen = 1;
        for (std::size_t i = 0; i < g.rows(); ++i)
            maxlen = std::max(maxlen, u[i].size() + g.at(i, j).size());
        std::vector<std::uint32_t> acc(maxlen, 0);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            const charconvo::Poly& a = u[i];
            const charconvo::Poly& b = g.at(i, j);
            for (std::size_t s = 0; s < a.size(); ++s)
                for (std::size_t t = 0; t < b.size(); ++t)
                    acc[s + t] = f.add(acc[s + t], f.mul(a[s], b[t]));
        }
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        v[j] = acc;
    }
    return v;
}

// Second free-distance strategy: plain odometer enumeration of every message
// polynomial vector with per-coordinate degree at most degree_cap, encoded by
// the naive convolver above.
inline long long free_distance_direct(const charconvo::PolyMatrix& g, int degree_cap) {
    const charconvo::Field& f = g.field();
    const std::uint32_t q = f.q();
    const std::size_t k = g.rows();
    const std::size_t coeffs = k * static_cast<std::size_t>(degree_cap + 1);
    std::vector<std::uint32_t> digits(coeffs, 0);
    long long best = -1;
    for (;;) {
        // advance odometer
        std::size_t pos = 0;
        while (pos < coeffs && digits[pos] == q - 1) digits[pos++] = 0;
        if (pos == coeffs) break;
        ++digits[pos];
        std::vector<charconvo::Poly> u(k);
        for (std::size_t i = 0; i < k; ++i) {
            charconvo::Poly p;
            for (int d = 0; d <= degree_cap; ++d) p.push_back(digits[i * (degree_cap + 1) + d]);
            charconvo::poly_trim(p);
            u[i] = p;
        }
        long long w = 0;
        for (const charconvo::Poly& p : convolve(f, u, g))
            for (std::uint32_t c : p)
                if (c != 0) ++w;
        if (best < 0 || w < best) best = w;
    }
    return best;
}

}  // namespace oracles

#endif
