#include <doctest.h>

#include <random>

#include "charconvo/convo.hpp"
#include "charconvo/distance.hpp"
#include "charconvo/errors.hpp"
#include "charconvo/record_io.hpp"
#include "oracles.hpp"

using namespace charconvo;

TEST_SUITE_BEGIN("convo");

TEST_CASE("split covers the matrix and preserves it") {
    Field f = Field::make(3, 1);
    CharCode code = build_char_code(f, 2, 5, 1);  // 26 rows
    auto single = split_parity_check(code.H, {26});
    CHECK(single.size() == 1);
    CHECK(single[0] == code.H);

    auto two = split_parity_check(code.H, {16, 10});
    CHECK(two[0] == build_char_code(f, 2, 5, 2).H);
    CHECK(vstack(two) == code.H);

    auto three = split_parity_check(code.H, {16, 6, 4});
    CHECK(three.size() == 3);
    CHECK(three[1].rows() == 6);
    CHECK(vstack(three) == code.H);

    CHECK_THROWS_AS(split_parity_check(code.H, {20, 10}), parameter_error);
    CHECK_THROWS_AS(split_parity_check(code.H, {26, 0}), parameter_error);
}

TEST_CASE("assembly pads at the bottom and enforces the rank condition") {
    Field f = Field::make(3, 1);
    CharCode code = build_char_code(f, 2, 5, 1);
    auto slices = split_parity_check(code.H, {16, 10});

    PolyMatrix g = assemble_generator({slices[0]});
    CHECK(g.rows() == 16);
    ConvParams pc = conv_params(g);
    CHECK(pc.memory == 0);

    PolyMatrix g2 = assemble_generator(slices);
    ConvParams p2 = conv_params(g2);
    CHECK(p2.memory == 1);
    CHECK(p2.degree == 10);
    for (int i = 0; i < 10; ++i) CHECK(p2.row_degrees[i] == 1);
    for (int i = 10; i < 16; ++i) CHECK(p2.row_degrees[i] == 0);

    // putting the small slice first violates the rank condition
    CHECK_THROWS_WITH_AS(assemble_generator({slices[1], slices[0]}),
                         doctest::Contains("rank condition"), parameter_error);
}

TEST_CASE("unit-memory binary records") {
    ConvRecord a = construct_unit_memory_binary(3, 6, 1, 2);
    CHECK(a.n == 64);
    CHECK(a.k == 42);
    CHECK(a.delta == 15);
    CHECK(a.memory == 1);
    CHECK(a.df_lower == 4);
    CHECK(a.kappa == 42);
    CHECK(a.slice_ranges == std::vector<std::pair<int, int>>{{0, 42}, {42, 57}});

    ConvRecord b = construct_unit_memory_binary(3, 5, 1, 2);
    CHECK(b.k == 16);   // the published example prints 17; the partial sum gives 16
    CHECK(b.delta == 10);
    CHECK(b.df_lower == 4);

    ConvRecord c = construct_unit_memory_binary(3, 7, 2, 3);
    CHECK(c.n == 128);
    CHECK(c.k == 64);
    CHECK(c.delta == 35);
    CHECK(c.df_lower == 8);

    CHECK_THROWS_WITH_AS(construct_unit_memory_binary(3, 4, 1, 2), doctest::Contains("rank condition"),
                         parameter_error);
    CHECK_THROWS_AS(construct_unit_memory_binary(3, 6, 0, 2), parameter_error);
    CHECK_THROWS_AS(construct_unit_memory_binary(4, 6, 1, 2), parameter_error);  // even q
}

TEST_CASE("dual records carry the dual parameters and no generator") {
    ConvRecord a = construct_unit_memory_binary(3, 6, 1, 2);
    ConvRecord d = dual_record(a);
    CHECK(d.bound == BoundKind::dual);
    CHECK(d.n == 64);
    CHECK(d.k == 22);
    CHECK(d.delta == 15);
    CHECK_FALSE(d.memory.has_value());
    CHECK(d.df_lower == 17);
    CHECK_FALSE(d.G.has_value());
    CHECK(d.k + a.k == a.n);

    ConvRecord b = dual_record(construct_unit_memory_binary(3, 5, 1, 2));
    CHECK(b.k == 16);  // published example prints 15
    CHECK(b.df_lower == 9);

    ConvRecord lary = construct_unit_memory_lary(7, 3, 3, 1, 2);
    CHECK_THROWS_AS(dual_record(lary), parameter_error);
}

TEST_CASE("two-memory preconditions follow the binomial chain") {
    CHECK_THROWS_WITH_AS(construct_two_memory_binary(3, 7, 1, 2, 3), doctest::Contains("rank condition"),
                         parameter_error);  // 21 < 35
    CHECK_THROWS_WITH_AS(construct_two_memory_binary(3, 7, 2, 3, 4), doctest::Contains("rank condition"),
                         parameter_error);  // 29 < 35
    CHECK_THROWS_AS(construct_two_memory_binary(3, 7, 3, 2, 4), parameter_error);  // r < v violated
}

TEST_CASE("two-memory validity scan matches an independent binomial oracle") {
    for (int m = 4; m <= 10; ++m)
        for (int r = 1; r < m; ++r)
            for (int v = r + 1; v < m; ++v)
                for (int u = v + 1; u < m; ++u) {
                    long long tail = 0, mid = 0, inner = 0;
                    for (int i = u + 1; i <= m; ++i) tail += oracles::binomial(m, i);
                    for (int i = r + 1; i <= v; ++i) mid += oracles::binomial(m, i);
                    for (int i = v + 1; i <= u; ++i) inner += oracles::binomial(m, i);
                    bool expected = tail >= mid && mid >= inner;
                    bool got = true;
                    try {
                        params_for("t3", 3, 2, m, r, u, v);
                    } catch (const parameter_error&) {
                        got = false;
                    }
                    CHECK(got == expected);
                }
}

TEST_CASE("a valid two-memory construction, with the degree annotation") {
    ConvRecord rec = construct_two_memory_binary(3, 8, 1, 3, 4);
    CHECK(rec.n == 256);
    CHECK(rec.k == 93);
    CHECK(rec.kappa == 93);
    CHECK(rec.memory == 2);
    CHECK(rec.slice_ranges == std::vector<std::pair<int, int>>{{0, 93}, {93, 163}, {163, 247}});
    // row degrees: 84 rows reach D^2, none stop at D^1 (the D^1 band has 70 rows)
    CHECK(rec.delta == 168);
    REQUIRE(rec.annotations.size() == 1);
    CHECK(rec.annotations[0].subject == "degree delta");
    CHECK(rec.annotations[0].published == "84");
    CHECK(rec.annotations[0].computed == "168");
    ConvParams p = conv_params(*rec.G);
    CHECK(p.degree == 168);
    CHECK(p.memory == 2);
}

TEST_CASE("order-l unit-memory records") {
    ConvRecord rec = construct_unit_memory_lary(7, 3, 3, 1, 2);
    CHECK(rec.n == 27);
    CHECK(rec.k == 17);
    CHECK(rec.delta == 6);
    CHECK(rec.memory == 1);
    CHECK(rec.df_lower == 3);
    CHECK(rec.k + weight_partial_sum(3, 2, 3) == 27);

    // designed bound equals the designed distance of the reflection partner
    CHECK(rec.df_lower == designed_distance(3, 3, 3 * 2 - 1 - 1));

    CHECK_THROWS_AS(construct_unit_memory_lary(7, 3, 3, 2, 4), parameter_error);  // 4 < 13
    CHECK_THROWS_AS(construct_unit_memory_lary(5, 3, 3, 1, 2), parameter_error);  // 3 does not divide 4
}

TEST_CASE("published-limit condition is reported alongside the corrected one") {
    DesignedTuple ok = params_for("t4", 7, 3, 3, 2, 3);
    REQUIRE(ok.published_condition.has_value());
    CHECK_FALSE(*ok.published_condition);  // sum over i = 4..3 is empty
    CHECK(ok.condition_lhs >= ok.condition_rhs);

    DesignedTuple both = params_for("t4", 7, 3, 3, 1, 2);
    CHECK(*both.published_condition);  // here the literal form also holds
}

TEST_CASE("multi-memory slicing by weight cuts") {
    ConvRecord rec = construct_multi_memory(3, 2, 9, {3, 2, 1});
    CHECK(rec.prov.theorem == "multi");  // t3 chain does not hold here (84 < ... holds? promoted only if valid)
    CHECK(rec.n == 512);
    CHECK(rec.k == 382);
    CHECK(rec.slice_ranges == std::vector<std::pair<int, int>>{{0, 382}, {382, 466}, {466, 502}});
    CHECK(rec.memory == 2);
    CHECK(rec.delta == 2 * 36 + (84 - 36));
    CHECK(rec.df_lower == 4);

    // a single cut gives a memoryless record
    ConvRecord flat = construct_multi_memory(3, 2, 4, {1});
    CHECK(flat.memory == 0);
    CHECK(flat.delta == 0);
    CHECK(flat.k == 11);

    // slice bigger than the head violates the rank condition
    CHECK_THROWS_WITH_AS(construct_multi_memory(3, 2, 5, {3, 1}), doctest::Contains("rank condition"),
                         parameter_error);
}

TEST_CASE("two-cut multi form is byte-identical to the unit-memory constructor") {
    ConvRecord a = construct_unit_memory_binary(3, 5, 1, 2);
    ConvRecord b = construct_multi_memory(3, 2, 5, {2, 1});
    CHECK(record_to_text(a) == record_to_text(b));

    ConvRecord c = construct_unit_memory_lary(7, 3, 3, 1, 2);
    ConvRecord d = construct_multi_memory(7, 3, 3, {2, 1});
    CHECK(record_to_text(c) == record_to_text(d));

    ConvRecord e = construct_two_memory_binary(3, 8, 1, 3, 4);
    ConvRecord f = construct_multi_memory(3, 2, 8, {4, 3, 1});
    CHECK(record_to_text(e) == record_to_text(f));
}

TEST_CASE("structural verification passes across the small sweep") {
    SearchBudget budget;
    for (int q : {3, 5, 7}) {
        for (auto [m, r, u] : {std::tuple{5, 1, 2}, {6, 1, 2}, {6, 2, 3}}) {
            ConvRecord rec = construct_unit_memory_binary(q, m, r, u);
            VerifyReport rep = verify_record(rec, budget, false);
            CHECK(rep.all_pass());
            ConvRecord d = dual_record(rec);
            VerifyReport drep = verify_record(d, budget, false);
            CHECK(drep.all_pass());
        }
    }
    for (auto [r, u] : {std::pair{1, 2}, {2, 3}}) {
        ConvRecord rec = construct_unit_memory_lary(7, 3, 3, r, u);
        CHECK(verify_record(rec, SearchBudget{}, false).all_pass());
    }
}

TEST_CASE("designed bound depends only on the threshold r") {
    for (int m = 3; m <= 8; ++m)
        for (int r = 1; r < m; ++r)
            for (int u = r + 1; u < m; ++u) {
                DesignedTuple t;
                try {
                    t = params_for("t2", 3, 2, m, r, u);
                } catch (const parameter_error&) {
                    continue;
                }
                CHECK(t.df_lower == (1ll << (r + 1)));
            }
}

TEST_CASE("corrupting a slice breaks verification") {
    ConvRecord rec = construct_unit_memory_binary(3, 5, 1, 2);
    std::vector<std::uint32_t> entries = rec.H->entries();
    for (std::size_t j = 0; j < rec.H->cols(); ++j) entries[j] = 0;  // zero the first row of slice 0
    rec.H = MatrixFq(rec.field, rec.H->rows(), rec.H->cols(), std::move(entries));
    VerifyReport rep = verify_record(rec, SearchBudget{}, false);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("record documents round-trip") {
    ConvRecord rec = construct_unit_memory_binary(3, 5, 1, 2);
    std::string text = record_to_text(rec);
    ParsedRecord parsed = record_from_text(text);
    CHECK(parsed.prov.theorem == "t2");
    CHECK(parsed.prov.q == 3);
    CHECK(parsed.prov.m == 5);
    CHECK(parsed.prov.cuts == std::vector<int>{2, 1});
    CHECK(parsed.n == rec.n);
    CHECK(parsed.k == rec.k);
    CHECK(parsed.delta == rec.delta);
    CHECK(parsed.memory == rec.memory);
    CHECK(parsed.df_lower == rec.df_lower);
    CHECK(parsed.slice_ranges == rec.slice_ranges);
    REQUIRE(parsed.generator_text.has_value());
    CHECK(*parsed.generator_text == to_text(*rec.G));

    // rebuilt from provenance, the record serializes identically
    ConvRecord again = construct_from_provenance(parsed.prov);
    CHECK(record_to_text(again) == text);

    ConvRecord d = dual_record(rec);
    ParsedRecord pd = record_from_text(record_to_text(d));
    CHECK(pd.bound == BoundKind::dual);
    CHECK_FALSE(pd.memory.has_value());
    CHECK_FALSE(pd.generator_text.has_value());

    CHECK_THROWS_AS(record_from_text("garbage"), format_error);
}

TEST_CASE("charcode documents round-trip") {
    Field f = Field::make(7, 1);
    CharCode c = build_char_code(f, 3, 2, 1);
    ParsedCharCode p = charcode_from_text(charcode_to_text(c));
    CHECK(p.q == 7);
    CHECK(p.l == 3);
    CHECK(p.m == 2);
    CHECK(p.r == 1);
    CHECK(p.n == 9);
    CHECK(p.k == 3);
    CHECK(p.d == 6);
    CHECK(p.H == c.H);
    CHECK(p.G == c.G);
}

TEST_SUITE_END();
