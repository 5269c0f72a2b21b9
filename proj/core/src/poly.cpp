#include "charconvo/poly.hpp"

#include <algorithm>
#include <sstream>

#include "charconvo/errors.hpp"

namespace charconvo {

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool poly_is_zero(const Poly& f) { return f.empty(); }

bool poly_is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = f.add(x, y);
    }
    poly_trim(r);
    return r;
}

Poly poly_neg(const Field& f, const Poly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.neg(a[i]);
    return r;
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) { return poly_add(f, a, poly_neg(f, b)); }

Poly poly_scale(const Field& f, std::uint32_t c, const Poly& a) {
    if (c == 0) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    poly_trim(r);
    return r;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    poly_trim(r);
    return r;
}

Poly poly_shift(const Poly& a, int s) {
    if (a.empty()) return {};
    Poly r(a.size() + static_cast<std::size_t>(s), 0);
    std::copy(a.begin(), a.end(), r.begin() + s);
    return r;
}

PolyDivMod poly_divmod(const Field& f, const Poly& a, const Poly& b) {
    if (b.empty()) throw parameter_error("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    const int db = poly_deg(b);
    const std::uint32_t lead_inv = f.inv(b.back());
    if (poly_deg(rem) >= db) quot.assign(rem.size() - b.size() + 1, 0);
    while (poly_deg(rem) >= db) {
        int shift = poly_deg(rem) - db;
        std::uint32_t c = f.mul(rem.back(), lead_inv);
        quot[shift] = c;
        for (int i = 0; i <= db; ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
        poly_trim(rem);
    }
    poly_trim(quot);
    return {std::move(quot), std::move(rem)};
}

Poly poly_make_monic(const Field& f, Poly a) {
    if (a.empty() || a.back() == 1) return a;
    return poly_scale(f, f.inv(a.back()), a);
}

Poly poly_gcd_monic(const Field& f, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_divmod(f, a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(f, std::move(a));
}

int poly_weight(const Poly& a) {
    int w = 0;
    for (std::uint32_t c : a)
        if (c != 0) ++w;
    return w;
}

std::string poly_to_string(const Poly& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    return os.str();
}

Poly poly_from_string(const Field& f, const std::string& s) {
    Poly r;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw format_error("empty coefficient in polynomial '" + s + "'");
        std::uint32_t c = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw format_error("bad coefficient '" + tok + "'");
            c = c * 10 + static_cast<std::uint32_t>(ch - '0');
        }
        if (c >= f.q()) throw format_error("coefficient out of field range: " + tok);
        r.push_back(c);
        pos = next + 1;
    }
    poly_trim(r);
    return r;
}

}  // namespace charconvo
