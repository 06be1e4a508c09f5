#include <doctest.h>

#include "trigrid/analysis.hpp"
#include "trigrid/reduction.hpp"

using trigrid::BoundarySequences;
using trigrid::CheckRow;
using trigrid::Rational;

namespace {

const CheckRow& row_for(const std::vector<CheckRow>& rows, int n, int s, const std::string& part) {
    for (const CheckRow& r : rows)
        if (r.n == n && r.s == s && r.part == part) return r;
    throw std::logic_error("missing row " + part);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("edge classification of the once-reduced grid") {
    const trigrid::Grid g =
        trigrid::reduce_once(trigrid::make_uniform_grid(5, Rational(1))).child;
    const auto classes = trigrid::classify_edges(g, 1);
    CHECK(classes.size() == 30);  // 3 * 4*5/2
    for (const trigrid::EdgeClassification& ec : classes) {
        CHECK(ec.agrees);
        CHECK(ec.predicted != trigrid::EdgeClass::greater_than_one);  // none yet after one step
    }
}

TEST_CASE("vanishing ones holds at desk scale") {
    for (int n = 1; n <= 9; ++n) {
        const auto rows = trigrid::check_vanishing_ones(n);
        CHECK(trigrid::all_pass(rows));
    }
    // Spot-check the structure of the report for n = 3: s = 1 sits just
    // below the 4s threshold, so part b is conjecture-tested there.
    const auto rows3 = trigrid::check_vanishing_ones(3);
    CHECK(row_for(rows3, 3, 0, "a").pass);
    CHECK(row_for(rows3, 3, 1, "b").pass);
    CHECK_FALSE(row_for(rows3, 3, 1, "b").theorem_backed);
    CHECK(row_for(rows3, 3, 1, "c").pass);
    CHECK_FALSE(row_for(rows3, 3, 1, "c").theorem_backed);
    CHECK(row_for(rows3, 3, 2, "d").pass);

    const auto rows4 = trigrid::check_vanishing_ones(4);
    CHECK(row_for(rows4, 4, 1, "b").theorem_backed);
}

TEST_CASE("theorem scope tracks the 4s threshold") {
    // n = 7, s = 2: inside the conjecture range but below 4s = 8.
    const auto rows = trigrid::check_vanishing_ones(7);
    CHECK(row_for(rows, 7, 1, "b").theorem_backed);
    CHECK_FALSE(row_for(rows, 7, 2, "b").theorem_backed);
    CHECK(row_for(rows, 7, 2, "b").pass);
}

TEST_CASE("uniform center checks") {
    for (int n = 4; n <= 8; ++n) {
        const auto rows = trigrid::check_uniform_center(n, 1);
        CHECK(trigrid::all_pass(rows));
        for (const CheckRow& r : rows) CHECK(r.theorem_backed);
    }
    CHECK(trigrid::all_pass(trigrid::check_uniform_center(8, 2)));
    CHECK(trigrid::all_pass(trigrid::check_uniform_center(12, 3)));
    CHECK_THROWS_AS(trigrid::check_uniform_center(7, 2), std::invalid_argument);
}

TEST_CASE("three distinct diagonal types after three reductions") {
    const trigrid::Grid g =
        trigrid::reduce_to(trigrid::make_uniform_grid(23, Rational(1)), 20).grid;
    CHECK(trigrid::all_pass(trigrid::check_uniform_center(23, 3)));
    const trigrid::PreType d1 = g.pretype({4, 1});
    const trigrid::PreType d2 = g.pretype({5, 2});
    const trigrid::PreType d3 = g.pretype({6, 3});
    const trigrid::PreType interior = g.pretype({7, 4});
    CHECK_FALSE(trigrid::same_type(d1, d2));
    CHECK_FALSE(trigrid::same_type(d2, d3));
    CHECK_FALSE(trigrid::same_type(d1, d3));
    CHECK(interior == trigrid::PreType{Rational(1), Rational(1), Rational(1)});
    CHECK_FALSE(trigrid::same_type(d3, interior));
}

TEST_CASE("boundary sequences by recurrence") {
    const BoundarySequences seq = trigrid::boundary_sequences(8);
    CHECK(seq.l(1) == Rational(2, 3));
    CHECK(seq.b(1) == Rational(1));
    CHECK(seq.l(2) == Rational(1, 2));
    CHECK(seq.b(2) == Rational(13, 12));
    CHECK(seq.l(3) == Rational(13, 32));
    CHECK(seq.b(3) == Rational(1157, 960));
    CHECK(seq.l(4) == Rational(89, 256));
    CHECK(seq.b(4) == Rational(224369, 167424));
}

TEST_CASE("recurrence agrees with full reduction") {
    const BoundarySequences seq = trigrid::boundary_sequences(3);
    for (int s = 1; s <= 3; ++s) {
        const auto [l, b] = trigrid::boundary_labels_by_reduction(s);
        CHECK(l == seq.l(s));
        CHECK(b == seq.b(s));
    }
}

TEST_CASE("monotone identity checks") {
    const BoundarySequences seq = trigrid::boundary_sequences(64);
    const auto rows = trigrid::check_monotone_identity(seq);
    CHECK(trigrid::all_pass(rows));
    // The identity instance quoted everywhere: (1/2)(2/3) = 2*1*(2/3 - 1/2).
    CHECK(seq.l(2) * seq.l(1) == Rational(2) * seq.b(1) * (seq.l(1) - seq.l(2)));
    for (int s = 1; s <= 64; ++s) CHECK(seq.l(s) < Rational(1));
}

TEST_CASE("printed base formula versus derived form") {
    const BoundarySequences seq = trigrid::boundary_sequences(6);
    const auto table = trigrid::check_printed_base_formula(seq);
    REQUIRE(table.size() == 6);

    // Baseline row (s = 0, L_0 = 1): the printed form gives B_1 = 1 and matches.
    CHECK(table[0].s == 0);
    CHECK(table[0].printed_rhs == Rational(1));
    CHECK(table[0].b_next == Rational(1));
    CHECK(table[0].printed_holds);

    // s = 1: printed form evaluates to 1 but B_2 = 13/12; the discrepancy is
    // recorded, not patched.
    CHECK(table[1].printed_rhs == Rational(1));
    CHECK(table[1].b_next == Rational(13, 12));
    CHECK_FALSE(table[1].printed_holds);

    for (const trigrid::BaseFormulaRow& r : table) CHECK(r.derived_holds);

    const auto rows = trigrid::base_formula_rows(table);
    CHECK(trigrid::theorem_backed_pass(rows));
    CHECK_FALSE(trigrid::all_pass(rows));  // printed rows fail for s >= 1
}

TEST_CASE("gcd scan emits per-variant tables without a verdict") {
    const BoundarySequences seq = trigrid::boundary_sequences(10);
    const auto rows = trigrid::gcd_scan(seq);
    // First reading (L_s, L_{s+1}) fails immediately: gcd(num 2/3, num 1/2) = 1.
    const auto& first = rows.front();
    CHECK(first.variant == trigrid::GcdVariant{'L', 'L', 1}.name());
    CHECK(first.s == 1);
    CHECK(first.num_first == 2);
    CHECK(first.num_second == 1);
    CHECK_FALSE(first.greater_than_one);

    bool has_bb = false;
    for (const trigrid::GcdRow& r : rows) {
        if (r.variant == trigrid::GcdVariant{'B', 'B', 1}.name() && r.s == 2) {
            has_bb = true;
            CHECK(r.num_first == 13);
            CHECK(r.num_second == 1157);
            CHECK(r.gcd_value == 13);
            CHECK(r.greater_than_one);
        }
    }
    CHECK(has_bb);
}

TEST_CASE("asymptotics report") {
    const auto rows = trigrid::asymptotics_report(8);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].r_exact == Rational(2, 3));
    CHECK(rows[0].e_exact == Rational(1));
    CHECK(rows[1].e_exact == Rational(2, 3));
    CHECK(rows[2].e_exact == Rational(4, 7));
    CHECK(rows[2].r_exact == Rational(10, 7));
    CHECK(rows[3].e_exact == Rational(45, 82));
    CHECK(rows[4].e_exact == Rational(10000, 18321));
    for (const auto& r : rows) CHECK(r.e_float == doctest::Approx(r.e_exact.to_double()));
    CHECK(rows.back().exp_diff == std::nullopt);
    CHECK(rows[0].exp_diff.has_value());

    // Deterministic output: same input, byte-identical CSV.
    CHECK(trigrid::asymptotics_csv(rows) == trigrid::asymptotics_csv(trigrid::asymptotics_report(8)));
}

TEST_CASE("final-edge sequence turns once and then settles") {
    // The sequence dips below its limit point (minimum at n = 5) before
    // climbing back, so its successive differences do not shrink across
    // the turn; the trend row reports that honestly.
    const auto rows = trigrid::asymptotics_report(10);
    CHECK(rows[3].e_exact > rows[4].e_exact);  // e_4 > e_5
    CHECK(rows[4].e_exact < rows[5].e_exact);  // e_5 < e_6: the turn
    const Rational d5 = trigrid::abs(rows[5].e_exact - rows[4].e_exact);
    const Rational d6 = trigrid::abs(rows[6].e_exact - rows[5].e_exact);
    CHECK(d6 > d5);

    const auto trend = trigrid::asymptotics_trend_rows(rows);
    REQUIRE(trend.size() == 1);
    CHECK_FALSE(trend[0].pass);
    CHECK_FALSE(trend[0].theorem_backed);  // trend rows are data, not gates

    // Past the turn the differences do shrink monotonically.
    std::optional<Rational> prev;
    for (size_t i = 5; i + 1 < rows.size(); ++i) {  // from n = 6
        const Rational diff = trigrid::abs(rows[i + 1].e_exact - rows[i].e_exact);
        if (prev) CHECK(diff < *prev);
        prev = diff;
    }
}

TEST_CASE("csv writers") {
    const BoundarySequences seq = trigrid::boundary_sequences(3);
    const std::string csv = trigrid::sequences_csv(seq);
    CHECK(csv.find("s,L,B,L_float,B_float\n") == 0);
    CHECK(csv.find("1,2/3,1/1,") != std::string::npos);
    CHECK(csv.find("3,13/32,1157/960,") != std::string::npos);

    const auto rows = trigrid::check_vanishing_ones(4);
    const std::string rows_csv = trigrid::check_rows_csv(rows);
    CHECK(rows_csv.find("check,n,s,part,scope,status,detail\n") == 0);
    CHECK(rows_csv.find("vanishing-ones,4,1,b,theorem,pass,") != std::string::npos);
    CHECK(trigrid::check_rows_csv(rows) == rows_csv);
}

}  // TEST_SUITE
