#ifndef CHARCONVO_POLY_HPP
#define CHARCONVO_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charconvo/field.hpp"

namespace charconvo {

// Polynomial in D over GF(q): coefficient encodings, constant term first,
// trailing zeros trimmed. The zero polynomial is the empty vector.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& f);
int poly_deg(const Poly& f);  // -1 for the zero polynomial
bool poly_is_zero(const Poly& f);
bool poly_is_one(const Poly& f);

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_neg(const Field& f, const Poly& a);
Poly poly_scale(const Field& f, std::uint32_t c, const Poly& a);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_shift(const Poly& a, int s);  // multiply by D^s

struct PolyDivMod {
    Poly quot;
    Poly rem;
};
PolyDivMod poly_divmod(const Field& f, const Poly& a, const Poly& b);  // b != 0

Poly poly_gcd_monic(const Field& f, Poly a, Poly b);
Poly poly_make_monic(const Field& f, Poly a);

int poly_weight(const Poly& a);  // number of nonzero coefficients

// "c0,c1,..."; the zero polynomial prints as "0".
std::string poly_to_string(const Poly& a);
Poly poly_from_string(const Field& f, const std::string& s);

}  // namespace charconvo

#endif
