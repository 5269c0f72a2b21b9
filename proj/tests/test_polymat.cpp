#include <doctest.h>

#include <random>

#include "charconvo/convo.hpp"
#include "charconvo/errors.hpp"
#include "charconvo/polymat.hpp"
#include "oracles.hpp"

using namespace charconvo;

TEST_SUITE_BEGIN("polymat");

namespace {

PolyMatrix random_polymat(const Field& f, std::size_t k, std::size_t n, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
    std::uniform_int_distribution<int> ddist(0, maxdeg);
    std::vector<Poly> e(k * n);
    for (Poly& p : e) {
        int d = ddist(rng);
        p.resize(static_cast<std::size_t>(d) + 1);
        for (std::uint32_t& c : p) c = dist(rng);
        poly_trim(p);
    }
    return PolyMatrix(f, k, n, std::move(e));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Field f = Field::make(3, 1);
    Poly a{1, 1};       // 1 + D
    Poly b{1, 1, 1};    // 1 + D + D^2
    CHECK(poly_mul(f, a, b) == Poly{1, 2, 2, 1});
    CHECK(poly_deg(Poly{}) == -1);
    PolyDivMod dm = poly_divmod(f, poly_mul(f, a, b), a);
    CHECK(dm.quot == b);
    CHECK(dm.rem.empty());
    CHECK(poly_gcd_monic(f, poly_mul(f, a, b), poly_mul(f, a, Poly{2})) == a);
    CHECK(poly_to_string(Poly{}) == "0");
    CHECK(poly_from_string(f, "1,0,2") == Poly{1, 0, 2});
    CHECK(poly_from_string(f, "0") == Poly{});
    CHECK_THROWS_AS(poly_from_string(f, "5"), format_error);
}

TEST_CASE("row degrees, degree, memory") {
    Field f = Field::make(3, 1);
    PolyMatrix g(f, 1, 2, {Poly{1}, Poly{0, 1}});  // [1, D]
    ConvParams p = conv_params(g);
    CHECK(p.row_degrees == std::vector<int>{1});
    CHECK(p.degree == 1);
    CHECK(p.memory == 1);

    PolyMatrix c(f, 2, 2, {Poly{1}, Poly{2}, Poly{1}, Poly{}});
    ConvParams pc = conv_params(c);
    CHECK(pc.degree == 0);
    CHECK(pc.memory == 0);

    PolyMatrix z(f, 1, 2, {Poly{}, Poly{}});
    CHECK_THROWS_AS(conv_params(z), parameter_error);
}

TEST_CASE("unit-memory generator from the m=5 split has the expected shape") {
    ConvRecord rec = construct_unit_memory_binary(3, 5, 1, 2);
    REQUIRE(rec.G.has_value());
    ConvParams p = conv_params(*rec.G);
    CHECK(p.k == 16);
    CHECK(p.degree == 10);
    CHECK(p.memory == 1);
}

TEST_CASE("basicness of [1, D] with a working right inverse") {
    Field f = Field::make(3, 1);
    PolyMatrix g(f, 1, 2, {Poly{1}, Poly{0, 1}});
    BasicCheck b = is_basic(g);
    CHECK(b.basic);
    REQUIRE(b.right_inverse.has_value());
    CHECK(polymat_mul(g, *b.right_inverse) == PolyMatrix::identity(f, 1));
}

TEST_CASE("common factor defeats basicness") {
    Field f = Field::make(3, 1);
    PolyMatrix g(f, 1, 2, {Poly{1, 1}, Poly{1, 1}});  // [1+D, 1+D]
    BasicCheck b = is_basic(g);
    CHECK_FALSE(b.basic);
    REQUIRE(b.offending_factor.has_value());
    CHECK(*b.offending_factor == Poly{1, 1});
}

TEST_CASE("rank-deficient matrices are rejected by the basicness test") {
    Field f = Field::make(3, 1);
    PolyMatrix g(f, 2, 2, {Poly{1}, Poly{0, 1}, Poly{0, 1}, Poly{0, 0, 1}});  // [[1,D],[D,D^2]]
    CHECK_THROWS_AS(is_basic(g), parameter_error);
    CHECK_FALSE(is_reduced(g));  // high-order matrix [[0,1],[0,1]] has rank 1
    MatrixFq hi = high_order_matrix(g);
    CHECK(hi.at(0, 1) == 1);
    CHECK(hi.at(1, 1) == 1);
    CHECK(rank(hi) == 1);
}

TEST_CASE("[1, D] is reduced") {
    Field f = Field::make(3, 1);
    CHECK(is_reduced(PolyMatrix(f, 1, 2, {Poly{1}, Poly{0, 1}})));
}

TEST_CASE("smith form reassembles and orders its factors") {
    std::mt19937 rng(4242);
    for (std::uint32_t q : {3u, 9u}) {
        Field f = Field::from_q(q);
        for (int trial = 0; trial < 15; ++trial) {
            PolyMatrix g = random_polymat(f, 3, 4, 2, rng);
            SmithResult s = smith_normal_form(g);
            // S = U G W, diagonal with the computed factors
            PolyMatrix prod = polymat_mul(polymat_mul(s.U, g), s.W);
            for (std::size_t i = 0; i < prod.rows(); ++i)
                for (std::size_t j = 0; j < prod.cols(); ++j) {
                    if (i == j && i < s.factors.size())
                        CHECK(prod.at(i, j) == s.factors[i]);
                    else
                        CHECK(poly_is_zero(prod.at(i, j)));
                }
            // divisibility chain, monic factors
            for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
                CHECK(poly_is_zero(poly_divmod(f, s.factors[i + 1], s.factors[i]).rem));
            for (const Poly& d : s.factors) CHECK(d.back() == 1);
        }
    }
}

TEST_CASE("encoding identities") {
    Field f = Field::make(3, 1);
    PolyMatrix g(f, 2, 3,
                 {Poly{1}, Poly{0, 1}, Poly{1, 2}, Poly{2}, Poly{}, Poly{0, 0, 1}});
    // unit vectors reproduce rows
    std::vector<Poly> e1{Poly{1}, Poly{}};
    std::vector<Poly> row = encode(e1, g);
    for (std::size_t j = 0; j < g.cols(); ++j) CHECK(row[j] == g.at(0, j));

    // (1+D) * [1, D] = (1+D, D+D^2)
    PolyMatrix g2(f, 1, 2, {Poly{1}, Poly{0, 1}});
    std::vector<Poly> v = encode({Poly{1, 1}}, g2);
    CHECK(v[0] == Poly{1, 1});
    CHECK(v[1] == Poly{0, 1, 1});
    CHECK(poly_vector_weight(v) == 4);
    CHECK(poly_vector_weight({Poly{}, Poly{}}) == 0);

    CHECK_THROWS_AS(encode({Poly{1}}, g), parameter_error);
}

TEST_CASE("encode agrees with the naive convolution oracle and is linear") {
    std::mt19937 rng(17);
    Field f = Field::make(3, 1);
    std::uniform_int_distribution<std::uint32_t> dist(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
        PolyMatrix g = random_polymat(f, 2, 3, 2, rng);
        auto random_message = [&]() {
            std::vector<Poly> u(2);
            for (Poly& p : u) {
                p.resize(3);
                for (std::uint32_t& c : p) c = dist(rng);
                poly_trim(p);
            }
            return u;
        };
        std::vector<Poly> u = random_message(), w = random_message();
        CHECK(encode(u, g) == oracles::convolve(f, u, g));

        std::uint32_t a = dist(rng);
        std::vector<Poly> combined(2);
        for (int i = 0; i < 2; ++i) combined[i] = poly_add(f, poly_scale(f, a, u[i]), w[i]);
        std::vector<Poly> lhs = encode(combined, g);
        std::vector<Poly> ue = encode(u, g), we = encode(w, g);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(lhs[j] == poly_add(f, poly_scale(f, a, ue[j]), we[j]));
    }
}

TEST_CASE("text format round-trips") {
    std::mt19937 rng(5);
    Field f = Field::make(3, 1);
    PolyMatrix g = random_polymat(f, 2, 3, 2, rng);
    PolyMatrix back = polymat_from_text(to_text(g));
    CHECK(back == g);
    CHECK(to_text(back) == to_text(g));
    CHECK_THROWS_AS(polymat_from_text("1 1 3"), format_error);
}

TEST_SUITE_END();
