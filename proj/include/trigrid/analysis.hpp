#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigrid/grid.hpp"
#include "trigrid/structure.hpp"

namespace trigrid {

// ---------------------------------------------------------------------------
// Reporting primitives

/// One verdict of a checker, keyed by sweep coordinates. Theorem-backed
/// rows are the ones a CI gate may fail on; conjecture-tested rows are
/// data. A failing row carries its first counterexample in `detail`.
struct CheckRow {
    std::string check;
    int n = 0;
    int s = 0;
    std::string part;
    bool theorem_backed = false;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckRow>& rows);
bool theorem_backed_pass(const std::vector<CheckRow>& rows);

std::string check_rows_csv(const std::vector<CheckRow>& rows);
std::string check_rows_json(const std::vector<CheckRow>& rows);

// ---------------------------------------------------------------------------
// Edge classification against the vanishing-ones prediction

enum class EdgeClass { less_than_one, equal_one, greater_than_one };

std::string to_string(EdgeClass c);

EdgeClass classify_value(const Rational& v);

/// Per-edge comparison of the grid after s reductions against the
/// predicted pattern: subgrid-interior edges are 1, edges on the perimeter
/// of any s'-subgrid (s' <= s) are below 1, and the rest are above 1.
struct EdgeClassification {
    EdgeRef edge;
    EdgeClass actual;
    EdgeClass predicted;
    bool agrees = false;
};

std::vector<EdgeClassification> classify_edges(const Grid& g, int s);

/// Checks the vanishing-ones pattern for the uniform n-row grid across
/// every reduction depth s = 0..n-1:
///   part a: the unreduced grid is all ones;
///   part b: for s <= floor((n+1)/4), the s-subgrid interior stays 1;
///   part c: the three-way classification of the remaining edges;
///   part d: past that depth no edge equals 1 anywhere.
/// Failures are report content, not errors.
std::vector<CheckRow> check_vanishing_ones(int n);

/// Checks the uniform-center structure of the grid after s reductions
/// (requires n >= 4s):
///   part a: each diagonal d = 1..s has one triangle type across its
///           center rows (mirror images included);
///   part b: the s-subgrid interior is 1 and its perimeter labels agree;
///   part c: right = base on center triangles (left = base on mirrors).
std::vector<CheckRow> check_uniform_center(int n, int s);

// ---------------------------------------------------------------------------
// Left-boundary sequences

/// L[s-1] and B[s-1] hold the left and base/right labels of the diagonal-1
/// center triangles after s reductions.
struct BoundarySequences {
    std::vector<Rational> L;
    std::vector<Rational> B;

    const Rational& l(int s) const { return L.at(s - 1); }
    const Rational& b(int s) const { return B.at(s - 1); }
    int size() const { return static_cast<int>(L.size()); }
};

/// Computes the sequences by iterating the center-type recurrence across
/// diagonals; cost is polynomial in s_max and exact throughout.
BoundarySequences boundary_sequences(int s_max);

/// Independent route: reads (L_s, B_s) off a full reduction of the
/// (4s+2)-row uniform grid. Expensive; intended for cross-checking small s.
std::pair<Rational, Rational> boundary_labels_by_reduction(int s);

/// Exact sequence facts: L_1 = 2/3, strict monotone decrease, L_s < 1,
/// the product identity L_{s+1} L_s = 2 B_s (L_s - L_{s+1}) and its
/// reciprocal form 1/(2 B_s) = 1/L_{s+1} - 1/L_s.
std::vector<CheckRow> check_monotone_identity(const BoundarySequences& seq);

/// check_monotone_identity plus dual-path agreement rows for small s.
std::vector<CheckRow> check_sequences(int s_max, int dual_path_up_to = 4);

std::string sequences_csv(const BoundarySequences& seq);

// ---------------------------------------------------------------------------
// The printed base-label formula versus the derived one

/// Evaluation of the printed closed form B_{s+1} = 2 (1/L_{s+1} - 1/L_s)
/// next to the reciprocal form the recurrence actually implies; the
/// comparison is surfaced, never patched. Row s = 0 uses the uniform-grid
/// baseline L_0 = B_0 = 1.
struct BaseFormulaRow {
    int s = 0;
    Rational b_next;        // B_{s+1} as computed from the recurrence
    Rational printed_rhs;   // 2 (1/L_{s+1} - 1/L_s)
    bool printed_holds = false;
    bool derived_holds = false;  // 1/(2 B_s) = 1/L_{s+1} - 1/L_s
};

std::vector<BaseFormulaRow> check_printed_base_formula(const BoundarySequences& seq);

/// Report rows for the table above: the derived form is theorem-backed,
/// the printed form is report-only data.
std::vector<CheckRow> base_formula_rows(const std::vector<BaseFormulaRow>& table);

std::string base_formula_csv(const std::vector<BaseFormulaRow>& table);

// ---------------------------------------------------------------------------
// Numerator gcd scan

/// One reading of the (ambiguously indexed) gcd pattern: compare the
/// numerator of sequence `first` at s with that of sequence `second` at
/// s + shift.
struct GcdVariant {
    char first = 'L';   // 'L' or 'B'
    char second = 'L';
    int shift = 1;
    std::string name() const;
};

std::vector<GcdVariant> default_gcd_variants();

struct GcdRow {
    std::string variant;
    int s = 0;
    mpz_class num_first;
    mpz_class num_second;
    mpz_class gcd_value;
    bool greater_than_one = false;
};

/// Tabulates gcd(num_first, num_second) per variant and s. Emits data
/// only; no verdict is asserted for any variant.
std::vector<GcdRow> gcd_scan(const BoundarySequences& seq,
                             const std::vector<GcdVariant>& variants = default_gcd_variants());

std::string gcd_csv(const std::vector<GcdRow>& rows);

// ---------------------------------------------------------------------------
// Asymptotics report

/// Per-n desk-scale quantities: the edge value e_n of the single triangle
/// left after fully reducing the n-row ones-grid, the corner resistance
/// r_n, and trend columns. Exact values ride along as rationals; float
/// columns are for display only.
struct AsymptoticsRow {
    int n = 0;
    Rational e_exact;
    Rational r_exact;
    double e_float = 0.0;
    double abs_err_vs_limit = 0.0;  // |e_n - 3/(2e)|
    double r_float = 0.0;
    std::optional<double> exp_diff;  // exp(r_{n+1}) - exp(r_n)
    double r_over_harmonic = 0.0;
    double tail_ratio_mid = 0.0;   // t(n,i)*i / t(n,1) at i = ceil(n/2)
    double tail_ratio_last = 0.0;  // same at i = n
};

/// The numeric reference point 3/(2e) the final-edge sequence drifts
/// toward. Display-only; no limit claim is ever asserted.
double final_edge_reference();

std::vector<AsymptoticsRow> asymptotics_report(int n_max);

/// Soft trend checks over the report: successive |e_{n+1} - e_n| shrink
/// strictly from n = 4 on. Trend rows are conjecture-tested (data only).
std::vector<CheckRow> asymptotics_trend_rows(const std::vector<AsymptoticsRow>& rows);

std::string asymptotics_csv(const std::vector<AsymptoticsRow>& rows);
std::string asymptotics_json(const std::vector<AsymptoticsRow>& rows);

/// Deterministic float formatting shared by all report writers.
std::string format_double(double v);

}  // namespace trigrid
