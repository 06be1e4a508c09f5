#include "trigrid/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "trigrid/reduction.hpp"
#include "trigrid/transforms.hpp"

namespace trigrid {

namespace {

std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    return s;
}

}  // namespace

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

bool theorem_backed_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const CheckRow& r) { return !r.theorem_backed || r.pass; });
}

std::string check_rows_csv(const std::vector<CheckRow>& rows) {
    std::ostringstream out;
    out << "check,n,s,part,scope,status,detail\n";
    for (const CheckRow& r : rows) {
        out << r.check << ',' << r.n << ',' << r.s << ',' << r.part << ','
            << (r.theorem_backed ? "theorem" : "conjecture") << ',' << (r.pass ? "pass" : "fail")
            << ',' << sanitize(r.detail) << '\n';
    }
    return out.str();
}

std::string check_rows_json(const std::vector<CheckRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const CheckRow& r : rows) {
        out.push_back({{"check", r.check},
                       {"n", r.n},
                       {"s", r.s},
                       {"part", r.part},
                       {"scope", r.theorem_backed ? "theorem" : "conjecture"},
                       {"status", r.pass ? "pass" : "fail"},
                       {"detail", r.detail}});
    }
    return out.dump(2) + "\n";
}

std::string to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::less_than_one: return "<1";
        case EdgeClass::equal_one: return "=1";
        default: return ">1";
    }
}

EdgeClass classify_value(const Rational& v) {
    const Rational one(1);
    if (v < one) return EdgeClass::less_than_one;
    if (v == one) return EdgeClass::equal_one;
    return EdgeClass::greater_than_one;
}

std::vector<EdgeClassification> classify_edges(const Grid& g, int s) {
    const int m = g.n();
    const SubgridSpec inner = subgrid(m, s);
    std::set<EdgeRef> below_one;
    for (int sp = 1; sp <= s; ++sp) {
        const SubgridSpec rim = subgrid(m, sp);
        below_one.insert(rim.boundary_edges.begin(), rim.boundary_edges.end());
    }
    std::vector<EdgeClassification> out;
    out.reserve(static_cast<size_t>(m) * (m + 1) * 3 / 2);
    for (const EdgeRef ref : all_edges(m)) {
        EdgeClass predicted;
        if (inner.interior_edges.count(ref))
            predicted = EdgeClass::equal_one;
        else if (below_one.count(ref))
            predicted = EdgeClass::less_than_one;
        else
            predicted = EdgeClass::greater_than_one;
        const EdgeClass actual = classify_value(g.edge(ref));
        out.push_back({ref, actual, predicted, actual == predicted});
    }
    return out;
}

std::vector<CheckRow> check_vanishing_ones(int n) {
    if (n < 1) throw std::invalid_argument("check_vanishing_ones: n must be >= 1");
    std::vector<CheckRow> rows;
    const Rational one(1);
    const int depth_limit = (n + 1) / 4;

    Grid g = make_uniform_grid(n, one);
    {
        CheckRow row{"vanishing-ones", n, 0, "a", true, true, ""};
        for (const EdgeRef ref : all_edges(n)) {
            if (g.edge(ref) != one) {
                row.pass = false;
                row.detail = to_string(ref) + "=" + g.edge(ref).to_string();
                break;
            }
        }
        rows.push_back(std::move(row));
    }

    for (int s = 1; s <= n - 1; ++s) {
        g = reduce_once(g).child;
        if (s <= depth_limit) {
            const std::vector<EdgeClassification> classes = classify_edges(g, s);
            CheckRow part_b{"vanishing-ones", n, s, "b", n >= 4 * s, true, ""};
            CheckRow part_c{"vanishing-ones", n, s, "c", false, true, ""};
            for (const EdgeClassification& ec : classes) {
                const bool interior = ec.predicted == EdgeClass::equal_one;
                CheckRow& row = interior ? part_b : part_c;
                if (!ec.agrees && row.pass) {
                    row.pass = false;
                    row.detail = to_string(ec.edge) + "=" + g.edge(ec.edge).to_string() +
                                 " expected " + to_string(ec.predicted);
                }
            }
            rows.push_back(std::move(part_b));
            rows.push_back(std::move(part_c));
        } else {
            CheckRow part_d{"vanishing-ones", n, s, "d", false, true, ""};
            for (const EdgeRef ref : all_edges(g.n())) {
                if (g.edge(ref) == one) {
                    part_d.pass = false;
                    part_d.detail = to_string(ref) + "=1";
                    break;
                }
            }
            rows.push_back(std::move(part_d));
        }
    }
    return rows;
}

std::vector<CheckRow> check_uniform_center(int n, int s) {
    if (s < 1) throw std::invalid_argument("check_uniform_center: s must be >= 1");
    if (n < 4 * s)
        throw std::invalid_argument("check_uniform_center: requires n >= 4s, got n=" +
                                    std::to_string(n) + ", s=" + std::to_string(s));
    const Grid g = reduce_to(make_uniform_grid(n, Rational(1)), n - s).grid;
    std::vector<CheckRow> rows;

    CheckRow part_a{"uniform-center", n, s, "a", true, true, ""};
    for (int d = 1; d <= s && part_a.pass; ++d) {
        const std::vector<TriRef> center = uniform_center_triangles(n, s, d);
        const PreType& reference = g.pretype({s + d, d});
        for (const TriRef t : center) {
            if (!same_type(reference, g.pretype(t))) {
                part_a.pass = false;
                part_a.detail = "diagonal " + std::to_string(d) + ": " + to_string(t) +
                                " differs in type from " + to_string(TriRef{s + d, d});
                break;
            }
        }
    }
    rows.push_back(std::move(part_a));

    CheckRow part_b{"uniform-center", n, s, "b", true, true, ""};
    {
        const SubgridSpec spec = subgrid(g.n(), s);
        const Rational one(1);
        for (const EdgeRef ref : spec.interior_edges) {
            if (g.edge(ref) != one) {
                part_b.pass = false;
                part_b.detail = "interior " + to_string(ref) + "=" + g.edge(ref).to_string();
                break;
            }
        }
        if (part_b.pass && !spec.boundary_edges.empty()) {
            const Rational& rim_label = g.edge(*spec.boundary_edges.begin());
            for (const EdgeRef ref : spec.boundary_edges) {
                if (g.edge(ref) != rim_label) {
                    part_b.pass = false;
                    part_b.detail = "rim " + to_string(ref) + "=" + g.edge(ref).to_string() +
                                    " != " + rim_label.to_string();
                    break;
                }
            }
        }
    }
    rows.push_back(std::move(part_b));

    CheckRow part_c{"uniform-center", n, s, "c", true, true, ""};
    for (int d = 1; d <= s && part_c.pass; ++d) {
        const RowRange range = uniform_center_rows(n, s, d);
        for (int r = range.first; r <= range.last; ++r) {
            const PreType& p = g.pretype({r, d});
            if (p.right != p.base) {
                part_c.pass = false;
                part_c.detail = to_string(TriRef{r, d}) + ": right " + p.right.to_string() +
                                " != base " + p.base.to_string();
                break;
            }
            // Mirror image carries the reflected claim.
            const PreType& q = g.pretype({r, r + 1 - d});
            if (q.left != q.base) {
                part_c.pass = false;
                part_c.detail = to_string(TriRef{r, r + 1 - d}) + ": left " + q.left.to_string() +
                                " != base " + q.base.to_string();
                break;
            }
        }
    }
    rows.push_back(std::move(part_c));
    return rows;
}

// ---------------------------------------------------------------------------

namespace {

// Star legs of a triangle type, by clock position (see reduction.cpp).
Rational leg12(const PreType& p) { return delta(p.left, p.right, p.base); }
Rational leg8(const PreType& p) { return delta(p.base, p.left, p.right); }
Rational leg4(const PreType& p) { return delta(p.right, p.base, p.left); }

// One reduction step applied to the list of center types by diagonal.
// Types beyond the known diagonals are the uniform ones-type; the child
// gains one diagonal per step. Only diagonals 1..d_limit of the child are
// produced; diagonal d needs parent diagonals d-1..d+1, so a caller that
// ultimately wants diagonal 1 after k further steps passes d_limit = k+1
// and skips the expensive outer diagonals entirely.
std::vector<PreType> advance_center_types(const std::vector<PreType>& types, int d_limit) {
    static const PreType kOnes{Rational(1), Rational(1), Rational(1)};
    const int s = static_cast<int>(types.size());
    const int child_size = std::min(s + 1, d_limit);

    // Star legs per parent diagonal, one past the deepest child diagonal.
    std::vector<std::array<Rational, 3>> legs;  // {leg12, leg8, leg4}
    legs.reserve(child_size + 1);
    for (int d = 1; d <= child_size + 1; ++d) {
        const PreType& p = d <= s ? types[d - 1] : kOnes;
        legs.push_back({leg12(p), leg8(p), leg4(p)});
    }
    const auto l12 = [&](int d) -> const Rational& { return legs[d - 1][0]; };
    const auto l8 = [&](int d) -> const Rational& { return legs[d - 1][1]; };
    const auto l4 = [&](int d) -> const Rational& { return legs[d - 1][2]; };

    std::vector<PreType> child;
    child.reserve(child_size);
    for (int d = 1; d <= child_size; ++d) {
        PreType p;
        p.left = d == 1 ? l8(1) + l12(1) : wye(l4(d - 1), l8(d), l12(d));
        // right and base share the pairwise-product numerator; they divide
        // by the two star legs of the outer diagonal, which coincide
        // because every center type keeps right = base.
        const Rational pairs =
            l8(d + 1) * l12(d + 1) + l12(d + 1) * l4(d) + l4(d) * l8(d + 1);
        p.right = pairs / l8(d + 1);
        p.base = pairs / l12(d + 1);
        if (p.right != p.base)
            throw std::logic_error("advance_center_types: right/base labels diverged at d=" +
                                   std::to_string(d));
        child.push_back(std::move(p));
    }
    return child;
}

}  // namespace

BoundarySequences boundary_sequences(int s_max) {
    if (s_max < 1) throw std::invalid_argument("boundary_sequences: s_max must be >= 1");
    BoundarySequences seq;
    seq.L.reserve(s_max);
    seq.B.reserve(s_max);
    std::vector<PreType> types;
    for (int s = 1; s <= s_max; ++s) {
        types = advance_center_types(types, s_max - s + 1);
        seq.L.push_back(types.front().left);
        seq.B.push_back(types.front().right);
    }
    return seq;
}

std::pair<Rational, Rational> boundary_labels_by_reduction(int s) {
    if (s < 1) throw std::invalid_argument("boundary_labels_by_reduction: s must be >= 1");
    const int n = 4 * s + 2;
    const Grid g = reduce_to(make_uniform_grid(n, Rational(1)), n - s).grid;
    const PreType& p = g.pretype({s + 1, 1});
    if (p.right != p.base)
        throw std::logic_error("boundary_labels_by_reduction: right/base labels diverged");
    return {p.left, p.right};
}

std::vector<CheckRow> check_monotone_identity(const BoundarySequences& seq) {
    if (seq.size() < 2)
        throw std::invalid_argument("check_monotone_identity: need at least two terms");
    std::vector<CheckRow> rows;
    const int s_max = seq.size();
    const Rational one(1);
    const Rational two(2);

    CheckRow first{"sequences", 0, 1, "L1", true, seq.l(1) == Rational(2, 3),
                   "L_1=" + seq.l(1).to_string()};
    rows.push_back(std::move(first));

    CheckRow monotone{"sequences", 0, s_max, "monotone", true, true, ""};
    CheckRow lt_one{"sequences", 0, s_max, "lt-one", true, true, ""};
    CheckRow product{"sequences", 0, s_max, "product-identity", true, true, ""};
    CheckRow reciprocal{"sequences", 0, s_max, "reciprocal-identity", true, true, ""};
    for (int s = 1; s <= s_max; ++s) {
        if (lt_one.pass && !(seq.l(s) < one)) {
            lt_one.pass = false;
            lt_one.detail = "L_" + std::to_string(s) + "=" + seq.l(s).to_string();
        }
        if (s == s_max) break;
        if (monotone.pass && !(seq.l(s + 1) < seq.l(s))) {
            monotone.pass = false;
            monotone.detail = "L_" + std::to_string(s + 1) + " !< L_" + std::to_string(s);
        }
        if (product.pass &&
            seq.l(s + 1) * seq.l(s) != two * seq.b(s) * (seq.l(s) - seq.l(s + 1))) {
            product.pass = false;
            product.detail = "s=" + std::to_string(s);
        }
        if (reciprocal.pass &&
            one / (two * seq.b(s)) != one / seq.l(s + 1) - one / seq.l(s)) {
            reciprocal.pass = false;
            reciprocal.detail = "s=" + std::to_string(s);
        }
    }
    rows.push_back(std::move(monotone));
    rows.push_back(std::move(lt_one));
    rows.push_back(std::move(product));
    rows.push_back(std::move(reciprocal));
    return rows;
}

std::vector<CheckRow> check_sequences(int s_max, int dual_path_up_to) {
    const BoundarySequences seq = boundary_sequences(s_max);
    std::vector<CheckRow> rows = check_monotone_identity(seq);
    for (int s = 1; s <= std::min(dual_path_up_to, s_max); ++s) {
        const auto [l, b] = boundary_labels_by_reduction(s);
        CheckRow row{"sequences", 0, s, "dual-path", true, l == seq.l(s) && b == seq.b(s), ""};
        if (!row.pass)
            row.detail = "recurrence (" + seq.l(s).to_string() + ";" + seq.b(s).to_string() +
                         ") vs reduction (" + l.to_string() + ";" + b.to_string() + ")";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sequences_csv(const BoundarySequences& seq) {
    std::ostringstream out;
    out << "s,L,B,L_float,B_float\n";
    for (int s = 1; s <= seq.size(); ++s) {
        out << s << ',' << seq.l(s).to_string() << ',' << seq.b(s).to_string() << ','
            << format_double(seq.l(s).to_double()) << ',' << format_double(seq.b(s).to_double())
            << '\n';
    }
    return out.str();
}

std::vector<BaseFormulaRow> check_printed_base_formula(const BoundarySequences& seq) {
    if (seq.size() < 2)
        throw std::invalid_argument("check_printed_base_formula: need at least two terms");
    std::vector<BaseFormulaRow> table;
    const Rational one(1);
    const Rational two(2);
    const auto l_at = [&](int s) { return s == 0 ? one : seq.l(s); };
    const auto b_at = [&](int s) { return s == 0 ? one : seq.b(s); };
    for (int s = 0; s + 1 <= seq.size(); ++s) {
        BaseFormulaRow row;
        row.s = s;
        row.b_next = b_at(s + 1);
        row.printed_rhs = two * (one / l_at(s + 1) - one / l_at(s));
        row.printed_holds = row.printed_rhs == row.b_next;
        row.derived_holds = one / (two * b_at(s)) == one / l_at(s + 1) - one / l_at(s);
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<CheckRow> base_formula_rows(const std::vector<BaseFormulaRow>& table) {
    std::vector<CheckRow> rows;
    for (const BaseFormulaRow& r : table) {
        rows.push_back({"base-formula", 0, r.s, "derived", true, r.derived_holds, ""});
        rows.push_back({"base-formula", 0, r.s, "printed", false, r.printed_holds,
                        "B_" + std::to_string(r.s + 1) + "=" + r.b_next.to_string() +
                            " printed_rhs=" + r.printed_rhs.to_string()});
    }
    return rows;
}

std::string base_formula_csv(const std::vector<BaseFormulaRow>& table) {
    std::ostringstream out;
    out << "s,B_next,printed_rhs,printed_holds,derived_holds\n";
    for (const BaseFormulaRow& r : table) {
        out << r.s << ',' << r.b_next.to_string() << ',' << r.printed_rhs.to_string() << ','
            << (r.printed_holds ? "true" : "false") << ',' << (r.derived_holds ? "true" : "false")
            << '\n';
    }
    return out.str();
}

std::string GcdVariant::name() const {
    return std::string(1, first) + "_s:" + std::string(1, second) + "_s" +
           (shift == 0 ? "" : "+" + std::to_string(shift));
}

std::vector<GcdVariant> default_gcd_variants() {
    return {
        {'L', 'L', 1},
        {'L', 'B', 0},
        {'B', 'B', 1},
        {'L', 'B', 1},
        {'B', 'L', 1},
    };
}

std::vector<GcdRow> gcd_scan(const BoundarySequences& seq, const std::vector<GcdVariant>& variants) {
    if (seq.size() < 2) throw std::invalid_argument("gcd_scan: need at least two terms");
    std::vector<GcdRow> rows;
    for (const GcdVariant& variant : variants) {
        const auto pick = [&](char which, int s) -> const Rational& {
            return which == 'L' ? seq.l(s) : seq.b(s);
        };
        for (int s = 1; s + variant.shift <= seq.size(); ++s) {
            GcdRow row;
            row.variant = variant.name();
            row.s = s;
            row.num_first = pick(variant.first, s).num();
            row.num_second = pick(variant.second, s + variant.shift).num();
            row.gcd_value = gcd(row.num_first, row.num_second);
            row.greater_than_one = row.gcd_value > 1;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string gcd_csv(const std::vector<GcdRow>& rows) {
    std::ostringstream out;
    out << "variant,s,num_first,num_second,gcd,greater_than_one\n";
    for (const GcdRow& r : rows) {
        out << r.variant << ',' << r.s << ',' << r.num_first.get_str() << ','
            << r.num_second.get_str() << ',' << r.gcd_value.get_str() << ','
            << (r.greater_than_one ? "true" : "false") << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------

double final_edge_reference() { return 3.0 / (2.0 * std::exp(1.0)); }

std::vector<AsymptoticsRow> asymptotics_report(int n_max) {
    if (n_max < 1) throw std::invalid_argument("asymptotics_report: n_max must be >= 1");
    std::vector<AsymptoticsRow> rows;
    rows.reserve(n_max);
    const double reference = final_edge_reference();
    for (int n = 1; n <= n_max; ++n) {
        Grid g = make_uniform_grid(n, Rational(1));
        std::vector<Rational> tails;
        tails.reserve(n);
        while (g.n() >= 2) {
            ReductionStep step = reduce_once(g);
            tails.push_back(std::move(step.tails.top));
            g = std::move(step.child);
        }
        AsymptoticsRow row;
        row.n = n;
        row.e_exact = g.pretype({1, 1}).left;
        tails.push_back(reduce_final(g).top);

        Rational sum;
        for (const Rational& t : tails) sum += t;
        row.r_exact = Rational(2) * sum;

        row.e_float = row.e_exact.to_double();
        row.abs_err_vs_limit = std::abs(row.e_float - reference);
        row.r_float = row.r_exact.to_double();
        double harmonic = 0.0;
        for (int i = 1; i <= n; ++i) harmonic += 1.0 / i;
        row.r_over_harmonic = row.r_float / harmonic;
        const int mid = (n + 1) / 2;
        const auto ratio = [&](int i) {
            return (tails[i - 1] * Rational(i) / tails[0]).to_double();
        };
        row.tail_ratio_mid = ratio(mid);
        row.tail_ratio_last = ratio(n);
        rows.push_back(std::move(row));
    }
    for (int i = 0; i + 1 < static_cast<int>(rows.size()); ++i)
        rows[i].exp_diff = std::exp(rows[i + 1].r_float) - std::exp(rows[i].r_float);
    return rows;
}

std::vector<CheckRow> asymptotics_trend_rows(const std::vector<AsymptoticsRow>& rows) {
    std::vector<CheckRow> out;
    CheckRow shrink{"asymptotics", static_cast<int>(rows.size()), 0, "final-edge-diff-shrinking",
                    false, true, ""};
    std::optional<Rational> prev_diff;
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].n < 4) continue;
        const Rational diff = abs(rows[i + 1].e_exact - rows[i].e_exact);
        if (prev_diff && !(diff < *prev_diff)) {
            shrink.pass = false;
            shrink.detail = "|e_" + std::to_string(rows[i].n + 1) + "-e_" +
                            std::to_string(rows[i].n) + "| did not shrink";
            break;
        }
        prev_diff = diff;
    }
    out.push_back(std::move(shrink));
    return out;
}

std::string asymptotics_csv(const std::vector<AsymptoticsRow>& rows) {
    std::ostringstream out;
    out << "n,e,e_float,abs_err_vs_limit,r,r_float,exp_diff,r_over_harmonic,tail_ratio_mid,tail_"
           "ratio_last\n";
    for (const AsymptoticsRow& r : rows) {
        out << r.n << ',' << r.e_exact.to_string() << ',' << format_double(r.e_float) << ','
            << format_double(r.abs_err_vs_limit) << ',' << r.r_exact.to_string() << ','
            << format_double(r.r_float) << ',' << (r.exp_diff ? format_double(*r.exp_diff) : "")
            << ',' << format_double(r.r_over_harmonic) << ',' << format_double(r.tail_ratio_mid)
            << ',' << format_double(r.tail_ratio_last) << '\n';
    }
    return out.str();
}

std::string asymptotics_json(const std::vector<AsymptoticsRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const AsymptoticsRow& r : rows) {
        nlohmann::ordered_json jr{{"n", r.n},
                                  {"e", r.e_exact.to_string()},
                                  {"e_float", r.e_float},
                                  {"abs_err_vs_limit", r.abs_err_vs_limit},
                                  {"r", r.r_exact.to_string()},
                                  {"r_float", r.r_float},
                                  {"r_over_harmonic", r.r_over_harmonic},
                                  {"tail_ratio_mid", r.tail_ratio_mid},
                                  {"tail_ratio_last", r.tail_ratio_last}};
        if (r.exp_diff) jr["exp_diff"] = *r.exp_diff;
        else jr["exp_diff"] = nullptr;
        out.push_back(std::move(jr));
    }
    return out.dump(2) + "\n";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace trigrid
