#include <doctest.h>

#include <random>

#include "charconvo/errors.hpp"
#include "charconvo/field.hpp"
#include "oracles.hpp"

using namespace charconvo;

TEST_SUITE_BEGIN("field");

TEST_CASE("construction validates parameters") {
    CHECK_THROWS_AS(Field::make(2, 1), parameter_error);   // even characteristic
    CHECK_THROWS_AS(Field::make(9, 1), parameter_error);   // not prime
    CHECK_THROWS_AS(Field::make(15, 1), parameter_error);
    CHECK_THROWS_AS(Field::make(3, 0), parameter_error);
    CHECK_THROWS_AS(Field::make(3, 13), parameter_error);  // 3^13 > 2^20
    CHECK_NOTHROW(Field::make(3, 1));
    CHECK_NOTHROW(Field::make(3, 2));
}

TEST_CASE("from_q factors prime powers") {
    CHECK(Field::from_q(9).p() == 3);
    CHECK(Field::from_q(9).e() == 2);
    CHECK(Field::from_q(11).e() == 1);
    CHECK_THROWS_AS(Field::from_q(8), parameter_error);
    CHECK_THROWS_AS(Field::from_q(15), parameter_error);
}

TEST_CASE("prime field basics") {
    Field f = Field::make(3, 1);
    CHECK(f.q() == 3);
    CHECK(f.add(1, 2) == 0);
    CHECK(f.inv(2) == 2);
    CHECK(f.sub(0, 1) == 2);
    CHECK(f.neg(1) == 2);
    CHECK_THROWS_AS(f.inv(0), parameter_error);
}

TEST_CASE("canonical modulus of GF(9) is x^2+1 and x*x reduces") {
    Field f = Field::make(3, 2);
    CHECK(f.modulus() == std::vector<int>{1, 0, 1});
    // x has encoding 3; x*x = -1 has encoding 2
    CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("canonical modulus is the lex-smallest irreducible") {
    // degree 2 and 3 over small primes: irreducible iff no roots
    for (int p : {3, 5, 7}) {
        for (int e : {2, 3}) {
            Field f = Field::make(p, e);
            const std::vector<int>& mod = f.modulus();
            auto has_root = [&](const std::vector<int>& poly) {
                for (int x = 0; x < p; ++x) {
                    long long v = 0, pw = 1;
                    for (int c : poly) {
                        v = (v + c * pw) % p;
                        pw = (pw * x) % p;
                    }
                    if (v % p == 0) return true;
                }
                return false;
            };
            CHECK_FALSE(has_root(mod));
            // every lexicographically smaller monic candidate must be reducible
            std::vector<int> c(mod.begin(), mod.end() - 1);
            std::vector<int> probe(e, 0);
            bool done = false;
            while (!done) {
                if (probe == c) break;
                std::vector<int> candidate = probe;
                candidate.push_back(1);
                CHECK(has_root(candidate));  // reducible (deg <= 3: root exists)
                int i = e - 1;
                while (i >= 0 && probe[i] == p - 1) probe[i--] = 0;
                if (i < 0) done = true;
                else ++probe[i];
            }
        }
    }
}

TEST_CASE("extension multiplication matches the schoolbook oracle") {
    for (auto [p, e] : {std::pair{3, 2}, {3, 3}, {5, 2}}) {
        Field f = Field::make(p, e);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b) {
                std::vector<int> prod = oracles::polymul_mod(f.decode(a), f.decode(b), f.modulus(), p);
                CHECK(f.mul(a, b) == f.encode(prod));
            }
    }
}

TEST_CASE("field axioms on random triples, q <= 81") {
    std::mt19937 rng(12345);
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 25u, 27u, 49u, 81u}) {
        Field f = Field::from_q(q);
        std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
        for (int trial = 0; trial < 300; ++trial) {
            std::uint32_t a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, static_cast<long long>(q) - 1) == 1);
            }
        }
    }
}

TEST_CASE("encode/decode round-trips exhaustively, q <= 81") {
    for (std::uint32_t q : {3u, 9u, 27u, 81u, 5u, 25u, 7u, 49u, 11u}) {
        Field f = Field::from_q(q);
        for (std::uint32_t a = 0; a < q; ++a) CHECK(f.encode(f.decode(a)) == a);
    }
}

TEST_CASE("roots of unity") {
    CHECK(Field::make(3, 1).root_of_unity(2) == 2);
    CHECK(Field::make(7, 1).root_of_unity(3) == 2);
    CHECK_THROWS_AS(Field::make(5, 1).root_of_unity(3), parameter_error);  // 3 does not divide 4

    for (std::uint32_t q : {3u, 5u, 7u, 9u, 27u, 49u, 81u}) {
        Field f = Field::from_q(q);
        for (int l = 1; l <= static_cast<int>(q) - 1; ++l) {
            if ((q - 1) % l != 0) continue;
            std::uint32_t xi = f.root_of_unity(l);
            CHECK(f.pow(xi, l) == 1);
            for (int j = 1; j < l; ++j) CHECK(f.pow(xi, j) != 1);
        }
    }
}

TEST_CASE("serialized form") {
    CHECK(Field::make(3, 2).to_string() == "3^2:1,0,1");
    CHECK(Field::make(7, 1).to_string() == "7^1:0,1");
}

TEST_SUITE_END();
