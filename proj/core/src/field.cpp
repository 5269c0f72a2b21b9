#include "charconvo/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "charconvo/errors.hpp"

namespace charconvo {

namespace {

// Dense polynomials over Z_p, coefficients in [0, p), constant term first,
// trailing zeros trimmed. Only used for modulus handling and extension-field
// arithmetic; everything is small here.
using ZpPoly = std::vector<int>;

void trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly mul_mod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& mod, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += 1ll * a[i] * b[j];
    // Reduce by the monic modulus of degree e.
    const int e = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(acc.size()) - 1; d >= e; --d) {
        long long c = acc[d] % p;
        if (c == 0) continue;
        for (int j = 0; j < e; ++j) acc[d - e + j] -= c * mod[j];
        acc[d] = 0;
    }
    ZpPoly r(e, 0);
    for (int j = 0; j < e && j < static_cast<int>(acc.size()); ++j)
        r[j] = static_cast<int>(((acc[j] % p) + p) % p);
    trim(r);
    return r;
}

ZpPoly pow_mod(ZpPoly base, unsigned long long n, const ZpPoly& mod, int p) {
    ZpPoly r = {1};
    while (n > 0) {
        if (n & 1ull) r = mul_mod(r, base, mod, p);
        base = mul_mod(base, base, mod, p);
        n >>= 1;
    }
    return r;
}

ZpPoly poly_sub(const ZpPoly& a, const ZpPoly& b, int p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((x % p) + p) % p;
    }
    trim(r);
    return r;
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& m, int p) {
    // m monic
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int d = static_cast<int>(a.size()) - 1;
        int c = a[d];
        if (c != 0) {
            for (int j = 0; j <= dm; ++j) {
                int& t = a[d - dm + j];
                t = ((t - c * m[j]) % p + p) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, int p) {
    auto make_monic = [p](ZpPoly& f) {
        if (f.empty()) return;
        int lead = f.back();
        if (lead == 1) return;
        // lead^-1 mod p
        int inv = 1, base = lead, n = p - 2;
        while (n > 0) {
            if (n & 1) inv = static_cast<int>(1ll * inv * base % p);
            base = static_cast<int>(1ll * base * base % p);
            n >>= 1;
        }
        for (int& c : f) c = static_cast<int>(1ll * c * inv % p);
    };
    while (!b.empty()) {
        make_monic(b);
        ZpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

// Rabin's test: f of degree e is irreducible over GF(p) iff x^(p^e) = x mod f
// and gcd(x^(p^(e/t)) - x, f) = 1 for every prime t dividing e.
bool is_irreducible(const ZpPoly& f, int p) {
    const int e = static_cast<int>(f.size()) - 1;
    if (e < 1) return false;
    if (e == 1) return true;
    if (f[0] == 0) return false;  // divisible by x

    auto frobenius_iterate = [&](int times) {
        // x^(p^times) mod f
        ZpPoly x = {0, 1};
        ZpPoly r = x;
        for (int i = 0; i < times; ++i) r = pow_mod(r, static_cast<unsigned long long>(p), f, p);
        return r;
    };

    ZpPoly x = {0, 1};
    if (frobenius_iterate(e) != poly_mod(x, f, p)) return false;
    int rem = e;
    for (int t = 2; t * t <= rem; ++t) {
        if (rem % t != 0) continue;
        while (rem % t == 0) rem /= t;
        ZpPoly g = poly_gcd(f, poly_sub(frobenius_iterate(e / t), x, p), p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    if (rem > 1) {
        ZpPoly g = poly_gcd(f, poly_sub(frobenius_iterate(e / rem), x, p), p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree e over GF(p),
// coefficient tuples (c0, c1, ..., c_{e-1}) compared from the constant term.
std::vector<int> canonical_modulus(int p, int e) {
    if (e == 1) return {0, 1};  // x, unused by prime-field arithmetic
    std::vector<int> c(e, 0);
    while (true) {
        if (c[0] != 0) {  // constant term 0 means x divides f
            ZpPoly f(c.begin(), c.end());
            f.push_back(1);
            if (is_irreducible(f, p)) return f;
        }
        // next tuple in lex order: last coordinate varies fastest
        int i = e - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    throw parameter_error("no irreducible of requested degree found");  // unreachable
}

constexpr std::uint32_t table_limit = 1024;

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::make(int p, int e) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint32_t>(p)))
        throw parameter_error("field characteristic must be an odd prime, got " + std::to_string(p));
    if (e < 1) throw parameter_error("extension degree must be >= 1, got " + std::to_string(e));
    return Field(p, e, canonical_modulus(p, e));
}

Field Field::from_q(std::uint32_t q) {
    if (q < 3 || q % 2 == 0) throw parameter_error("field size must be an odd prime power, got " + std::to_string(q));
    std::uint32_t p = q;
    for (std::uint32_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    int e = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw parameter_error("field size must be an odd prime power, got " + std::to_string(q));
    return make(static_cast<int>(p), e);
}

Field::Field(int p, int e, std::vector<int> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (p_ < 3 || p_ % 2 == 0 || !is_prime(static_cast<std::uint32_t>(p_)))
        throw parameter_error("field characteristic must be an odd prime, got " + std::to_string(p_));
    if (e_ < 1) throw parameter_error("extension degree must be >= 1");
    unsigned long long q = 1;
    for (int i = 0; i < e_; ++i) {
        q *= static_cast<unsigned long long>(p_);
        if (q > max_q) throw parameter_error("field size exceeds the 2^20 guard");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (static_cast<int>(modulus_.size()) != e_ + 1 || modulus_.back() != 1)
        throw parameter_error("modulus must be monic of degree e");
    for (int c : modulus_)
        if (c < 0 || c >= p_) throw parameter_error("modulus coefficients must lie in [0, p)");
    if (e_ > 1 && !is_irreducible(modulus_, p_)) throw parameter_error("modulus is reducible");
    init_tables();
}

void Field::init_tables() {
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        // negation digitwise
        std::uint32_t x = a, r = 0, pw = 1;
        for (int i = 0; i < e_; ++i) {
            std::uint32_t d = x % p_;
            x /= p_;
            r += ((p_ - d) % p_) * pw;
            pw *= p_;
        }
        neg_table_[a] = r;
    }
    if (q_ > table_limit) return;
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
            add_table_[static_cast<std::size_t>(a) * q_ + b] = add_direct(a, b);
            mul_table_[static_cast<std::size_t>(a) * q_ + b] = mul_direct(a, b);
        }
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1) {
                inv_table_[a] = b;
                break;
            }
}

std::uint32_t Field::add_direct(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        std::uint32_t d = (a % p_ + b % p_) % p_;
        a /= p_;
        b /= p_;
        r += d * pw;
        pw *= p_;
    }
    return r;
}

std::uint32_t Field::mul_direct(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>((1ull * a * b) % q_);
    ZpPoly fa = decode(a) /* length e */, fb = decode(b);
    ZpPoly prod = mul_mod(ZpPoly(fa.begin(), fa.end()), ZpPoly(fb.begin(), fb.end()), modulus_, p_);
    prod.resize(e_, 0);
    return encode(prod);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (a >= q_ || b >= q_) throw parameter_error("element encoding out of range");
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_direct(a, b);
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (a >= q_) throw parameter_error("element encoding out of range");
    return neg_table_[a];
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a >= q_ || b >= q_) throw parameter_error("element encoding out of range");
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_direct(a, b);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a >= q_) throw parameter_error("element encoding out of range");
    if (a == 0) throw parameter_error("division by zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, static_cast<long long>(q_) - 2);
}

std::uint32_t Field::pow(std::uint32_t a, long long n) const {
    if (a >= q_) throw parameter_error("element encoding out of range");
    if (n < 0) return pow(inv(a), -n);
    std::uint32_t r = 1;
    std::uint32_t base = a;
    while (n > 0) {
        if (n & 1ll) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

std::vector<int> Field::decode(std::uint32_t a) const {
    if (a >= q_) throw parameter_error("element encoding out of range");
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return c;
}

std::uint32_t Field::encode(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != e_) throw parameter_error("coefficient vector has wrong length");
    std::uint32_t r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= p_) throw parameter_error("coefficient out of range");
        r += static_cast<std::uint32_t>(coeffs[i]) * pw;
        pw *= p_;
    }
    return r;
}

int Field::multiplicative_order(std::uint32_t a) const {
    if (a == 0) throw parameter_error("zero has no multiplicative order");
    std::uint32_t x = a;
    int ord = 1;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
        if (ord > static_cast<int>(q_)) throw parameter_error("order computation ran away");  // unreachable
    }
    return ord;
}

std::uint32_t Field::root_of_unity(int l) const {
    if (l < 1) throw parameter_error("root order must be positive");
    if ((q_ - 1) % static_cast<std::uint32_t>(l) != 0)
        throw parameter_error("unsupported root order: " + std::to_string(l) + " does not divide q-1 = " +
                              std::to_string(q_ - 1));
    for (std::uint32_t a = 1; a < q_; ++a) {
        if (pow(a, l) != 1) continue;
        if (multiplicative_order(a) == l) return a;
    }
    throw parameter_error("no element of requested order");  // unreachable for l | q-1
}

std::string Field::to_string() const {
    std::ostringstream os;
    os << p_ << '^' << e_ << ':';
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

}  // namespace charconvo
