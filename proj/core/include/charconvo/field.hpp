#ifndef CHARCONVO_FIELD_HPP
#define CHARCONVO_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace charconvo {

// Exact arithmetic in GF(p^e), p an odd prime. Elements are handled through
// their canonical integer encoding n = sum coeffs[i] * p^i in [0, q), where
// coeffs are the coordinates in the polynomial basis modulo the field's
// modulus. All operations are pure; a Field is immutable after construction.
class Field {
  public:
    // Field with the canonical modulus: the lexicographically smallest monic
    // irreducible of degree e over GF(p), coefficients compared constant term
    // first. For e = 1 the modulus is x (unused by arithmetic).
    static Field make(int p, int e);

    // Field of size q = p^e, factoring q. Rejects even or non-prime-power q.
    static Field from_q(std::uint32_t q);

    // Explicit modulus, constant term first, monic of degree e. Rejected if
    // reducible.
    Field(int p, int e, std::vector<int> modulus);

    int p() const { return p_; }
    int e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    bool operator==(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // a != 0
    std::uint32_t pow(std::uint32_t a, long long n) const;

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

    // Coefficient vector (length e) <-> canonical encoding.
    std::vector<int> decode(std::uint32_t a) const;
    std::uint32_t encode(const std::vector<int>& coeffs) const;

    // Smallest canonical encoding among elements of multiplicative order
    // exactly l. Requires l | (q - 1).
    std::uint32_t root_of_unity(int l) const;

    // Order of a in the multiplicative group; a != 0.
    int multiplicative_order(std::uint32_t a) const;

    // "p^e:c0,c1,...,ce" (modulus coefficients, constant term first).
    std::string to_string() const;

    static constexpr std::uint32_t max_q = 1u << 20;

  private:
    void init_tables();
    std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t add_direct(std::uint32_t a, std::uint32_t b) const;

    int p_ = 0;
    int e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> modulus_;
    // Lookup tables, built when q is small enough that they are cheap.
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> inv_table_;
    std::vector<std::uint32_t> neg_table_;
};

bool is_prime(std::uint32_t n);

}  // namespace charconvo

#endif
