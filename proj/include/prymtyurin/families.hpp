// Ready-made families: realize products of Jacobians through point-stabilizer
// presentations of symmetric and alternating groups, with the closed forms
// every such presentation must satisfy and a built-in table of worked rows.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prymtyurin/engine.hpp"
#include "prymtyurin/numbers.hpp"
#include "prymtyurin/permgroup.hpp"
#include "prymtyurin/permutation.hpp"
#include "prymtyurin/presentation.hpp"
#include "prymtyurin/subgroup.hpp"

namespace prymtyurin {

// The three cover families, distinguished by factor group and local
// monodromy at the branch points:
//   Symmetric                      S_n, simple branch points (transpositions)
//   AlternatingDoubleTranspositions A_n, branch points of type (1 2)(3 4)
//   AlternatingThreeCycles          A_n, branch points of type (1 2 3)
enum class FamilyKind {
    Symmetric,
    AlternatingDoubleTranspositions,
    AlternatingThreeCycles,
};

inline std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Symmetric: return "sym";
        case FamilyKind::AlternatingDoubleTranspositions: return "alt-dt";
        case FamilyKind::AlternatingThreeCycles: return "alt-3c";
    }
    throw_input("unknown family kind");
}

inline FamilyKind parse_family_kind(const std::string& name) {
    if (name == "sym") return FamilyKind::Symmetric;
    if (name == "alt-dt") return FamilyKind::AlternatingDoubleTranspositions;
    if (name == "alt-3c") return FamilyKind::AlternatingThreeCycles;
    throw_input("unknown family kind '" + name +
                "' (expected sym, alt-dt, or alt-3c)");
}

struct FamilyFactor {
    FamilyKind kind = FamilyKind::Symmetric;
    Integer genus;

    bool operator==(const FamilyFactor&) const = default;
};

// One family instance: m factor covers of a common degree n, factor i
// realizing a curve of genus genera[i].
struct FamilySpec {
    int n = 0;
    std::vector<FamilyFactor> factors;

    bool operator==(const FamilySpec&) const = default;
};

inline FamilySpec uniform_family(FamilyKind kind, int n,
                                 const std::vector<Integer>& genera) {
    FamilySpec spec;
    spec.n = n;
    for (const Integer& genus : genera) spec.factors.push_back({kind, genus});
    return spec;
}

// Existence gates for the factor covers.  Returns human-readable caveats
// (currently only the hyperelliptic assumption for degree-2 factors); throws
// an input error when a factor is outside its gate.
inline std::vector<std::string> validate_family(const FamilySpec& spec) {
    std::vector<std::string> notes;
    if (spec.n < 2) throw_input("family degree n must be at least 2");
    if (spec.factors.empty()) {
        throw_input("a family needs at least one factor");
    }
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const FamilyFactor& factor = spec.factors[i];
        const std::string where = "factor " + std::to_string(i + 1);
        if (factor.genus < 1) {
            throw_input(where + ": factor genus must be at least 1, got " +
                        factor.genus.str());
        }
        if (factor.kind == FamilyKind::Symmetric) {
            if (spec.n == 2) {
                if (factor.genus >= 3) {
                    notes.push_back(where + ": a degree-2 cover exists only "
                                            "for hyperelliptic curves of "
                                            "genus " + factor.genus.str());
                }
            } else if (factor.genus + 1 > spec.n) {
                throw_input(where + ": a symmetric factor of genus " +
                            factor.genus.str() + " needs degree n >= genus+1" +
                            " (or n = 2 for hyperelliptic curves), got n = " +
                            std::to_string(spec.n));
            }
        } else {
            if (factor.genus < 3) {
                throw_input(where + ": alternating factors need genus >= 3, "
                            "got " + factor.genus.str());
            }
            if (Integer(spec.n) < 2 * factor.genus + 1) {
                throw_input(where + ": an alternating factor of genus " +
                            factor.genus.str() +
                            " needs degree n >= 2*genus+1, got n = " +
                            std::to_string(spec.n));
            }
        }
    }
    return notes;
}

namespace detail {

// Branch points a degree-n factor cover of this kind and genus needs.
inline Integer family_branch_count(FamilyKind kind, const Integer& genus, int n) {
    if (kind == FamilyKind::Symmetric) return 2 * genus + 2 * (n - 1);
    return genus + (n - 1);
}

// Local monodromy at a branch point, inside one factor of degree n.
inline Permutation family_branch_element(FamilyKind kind, int n) {
    switch (kind) {
        case FamilyKind::Symmetric:
            return Permutation::from_cycles("(1 2)", n);
        case FamilyKind::AlternatingDoubleTranspositions:
            return Permutation::from_cycles("(1 2)(3 4)", n);
        case FamilyKind::AlternatingThreeCycles:
            return Permutation::from_cycles("(1 2 3)", n);
    }
    throw_input("unknown family kind");
}

inline GroupSpec family_factor_group_spec(FamilyKind kind, int n) {
    GroupSpec spec;
    spec.kind = (kind == FamilyKind::Symmetric) ? GroupSpec::Kind::Symmetric
                                                : GroupSpec::Kind::Alternating;
    spec.n = n;
    return spec;
}

}  // namespace detail

// The presentation realizing a family instance: point stabilizers inside the
// (product of) factor group(s), one fixed-points-minus-one character per
// factor, and the branch data the covers force.
inline PresentationInput family_presentation(
    const FamilySpec& spec, std::size_t bound = kDefaultEnumerationBound) {
    validate_family(spec);
    const std::size_t arity = spec.factors.size();

    GroupSpec group_spec;
    SubgroupSpec subgroup_spec;
    std::vector<RepSpec> reps;
    if (arity == 1) {
        group_spec = detail::family_factor_group_spec(spec.factors[0].kind,
                                                      spec.n);
        subgroup_spec.kind = SubgroupSpec::Kind::PointStabilizer;
        subgroup_spec.point = spec.n;
        reps.push_back({RepSpec::Kind::StandardSymmetric, 0,
                        RepSpec::Kind::StandardSymmetric, {}});
    } else {
        group_spec.kind = GroupSpec::Kind::Product;
        subgroup_spec.kind = SubgroupSpec::Kind::Product;
        for (std::size_t f = 0; f < arity; ++f) {
            group_spec.factors.push_back(
                detail::family_factor_group_spec(spec.factors[f].kind, spec.n));
            SubgroupSpec stab;
            stab.kind = SubgroupSpec::Kind::PointStabilizer;
            stab.point = spec.n;
            subgroup_spec.factors.push_back(stab);
            reps.push_back({RepSpec::Kind::OuterTensor, static_cast<int>(f + 1),
                            RepSpec::Kind::StandardSymmetric,
                            {}});
        }
    }
    PermGroupPtr group = generate_group(group_spec, bound);
    Subgroup subgroup = Subgroup::build(group, subgroup_spec);

    GeometricSignature signature;
    signature.quotient_genus = 0;
    const std::vector<int> offsets =
        arity == 1 ? std::vector<int>{0} : group->factor_offsets();
    for (std::size_t f = 0; f < arity; ++f) {
        const FamilyFactor& factor = spec.factors[f];
        const Permutation local =
            detail::family_branch_element(factor.kind, spec.n);
        signature.branches.push_back(
            {embed_at(local, offsets[f], group->degree()),
             detail::family_branch_count(factor.kind, factor.genus, spec.n)});
    }
    return PresentationInput{std::move(group),    std::move(subgroup),
                             std::move(reps),     std::move(signature),
                             std::move(group_spec), std::move(subgroup_spec)};
}

// ---------------------------------------------------------------------------
// Closed forms.
// ---------------------------------------------------------------------------

// What every family instance must evaluate to.  `genus_x_doubled_counts` is
// the value the intermediate-curve genus takes if each branch count is
// doubled; the table flags it because published figures for the alternating
// product rows match this variant rather than the consistent one.
struct ClosedFormExpectation {
    Integer group_order;
    Integer subgroup_order;
    Integer index;                   // n^m
    Integer double_cosets;           // 2^m
    Integer b;                       // |H| * n / (n-1)
    Integer q;                       // n^(m-1)
    Integer dim_prym;                // sum of the genera
    Integer genus_x;                 // 1 + n^(m-1) (sum g + m(n-1) - n)
    Integer genus_x_doubled_counts;  // 2 genus_x - 1 + n^m
    Integer genus_cover;
};

inline ClosedFormExpectation closed_form_expectation(const FamilySpec& spec) {
    validate_family(spec);
    const int n = spec.n;
    const auto m = static_cast<unsigned>(spec.factors.size());

    ClosedFormExpectation out;
    out.group_order = 1;
    out.subgroup_order = 1;
    out.dim_prym = 0;
    Integer genus_sum = 0;
    for (const FamilyFactor& factor : spec.factors) {
        const Integer factor_order = factor.kind == FamilyKind::Symmetric
                                         ? factorial(static_cast<unsigned>(n))
                                         : factorial(static_cast<unsigned>(n)) / 2;
        out.group_order *= factor_order;
        out.subgroup_order *= factor_order / n;
        genus_sum += factor.genus;
    }
    out.dim_prym = genus_sum;
    out.index = integer_power(n, m);
    out.double_cosets = integer_power(2, m);
    out.b = out.subgroup_order * n / (n - 1);
    out.q = integer_power(n, m - 1);
    out.genus_x =
        1 + integer_power(n, m - 1) * (genus_sum + Integer(m) * (n - 1) - n);
    out.genus_x_doubled_counts = 2 * out.genus_x - 1 + out.index;

    // Top-curve genus from the branch orders: transpositions and double
    // transpositions have order 2, three-cycles order 3.
    Rational genus_cover = 1 - Rational(out.group_order);
    for (const FamilyFactor& factor : spec.factors) {
        const Integer count =
            detail::family_branch_count(factor.kind, factor.genus, n);
        const int local_order =
            factor.kind == FamilyKind::AlternatingThreeCycles ? 3 : 2;
        genus_cover += Rational(count) * Rational(out.group_order) *
                       (1 - Rational(1, local_order)) / 2;
    }
    out.genus_cover = require_integral(genus_cover, "top curve genus");
    return out;
}

// ---------------------------------------------------------------------------
// The product coefficient identity.
// ---------------------------------------------------------------------------

// For a product presentation the coefficient of the double coset indexed by
// (i_1, ..., i_m) must equal sum_f (|H| / |H_f|) a_{i_f}, where a is the
// coefficient vector of factor f on its own.  This check recomputes both
// sides independently.
struct CoefficientIdentityCheck {
    std::vector<Integer> engine_coefficients;
    std::vector<Integer> predicted_coefficients;
    bool matches = false;
};

inline CoefficientIdentityCheck coefficient_identity_check(
    const FamilySpec& spec, std::size_t bound = kDefaultEnumerationBound) {
    if (spec.factors.size() < 2) {
        throw_input("the coefficient identity concerns products; give at "
                    "least two factors");
    }
    CoefficientIdentityCheck check;

    const PresentationInput input = family_presentation(spec, bound);
    const std::vector<ClassFunction> chars = validate_presentation(input);
    const CorrespondenceData data = correspondence_coefficients(input, chars);
    check.engine_coefficients = data.coefficients;

    std::vector<std::vector<Integer>> factor_coefficients;
    std::vector<Integer> cofactor;  // |H| / |H_f|
    for (const FamilyFactor& factor : spec.factors) {
        FamilySpec single;
        single.n = spec.n;
        single.factors = {factor};
        const PresentationInput single_input = family_presentation(single, bound);
        const std::vector<ClassFunction> single_chars =
            validate_presentation(single_input);
        factor_coefficients.push_back(
            correspondence_coefficients(single_input, single_chars).coefficients);
        cofactor.push_back(input.subgroup.order() /
                           single_input.subgroup.order());
    }

    const std::size_t arity = spec.factors.size();
    std::vector<std::size_t> at(arity, 0);
    while (true) {
        Integer predicted = 0;
        for (std::size_t f = 0; f < arity; ++f) {
            predicted += cofactor[f] * factor_coefficients[f][at[f]];
        }
        check.predicted_coefficients.push_back(predicted);
        std::size_t f = arity;
        bool carried = true;
        while (f-- > 0) {
            if (++at[f] < factor_coefficients[f].size()) {
                carried = false;
                break;
            }
            at[f] = 0;
        }
        if (carried) break;
    }
    check.matches =
        (check.engine_coefficients == check.predicted_coefficients);
    return check;
}

// ---------------------------------------------------------------------------
// Built-in table (the rows behind the paper-table command).
// ---------------------------------------------------------------------------

struct TableRow {
    std::string label;
    FamilySpec spec;
    ClosedFormExpectation expected;
    PrymReport report;
    bool matches_closed_forms = false;
    std::vector<std::string> mismatches;
};

namespace detail {

inline std::string family_row_label(const FamilySpec& spec) {
    const auto describe = [](const FamilyFactor& factor) {
        return family_kind_name(factor.kind) + " g=" + factor.genus.str();
    };
    bool uniform_kind = true;
    for (const FamilyFactor& factor : spec.factors) {
        if (factor.kind != spec.factors.front().kind) uniform_kind = false;
    }
    std::string label;
    if (spec.factors.size() == 1) {
        label = describe(spec.factors.front());
    } else {
        label = uniform_kind
                    ? family_kind_name(spec.factors.front().kind) + " genera ("
                    : std::string("mixed (");
        for (std::size_t f = 0; f < spec.factors.size(); ++f) {
            if (f) label += ", ";
            label += uniform_kind ? spec.factors[f].genus.str()
                                  : describe(spec.factors[f]);
        }
        label += ")";
    }
    return label + ", n=" + std::to_string(spec.n);
}

inline void compare_row(TableRow& row) {
    const auto check = [&row](const char* what, const Integer& got,
                              const Integer& expected) {
        if (got != expected) {
            row.mismatches.push_back(std::string(what) + ": engine " +
                                     got.str() + ", closed form " +
                                     expected.str());
        }
    };
    check("group order", row.report.group_order, row.expected.group_order);
    check("subgroup order", row.report.subgroup_order,
          row.expected.subgroup_order);
    check("index", row.report.index, row.expected.index);
    check("double cosets",
          Integer(row.report.correspondence.decomposition.blocks.size()),
          row.expected.double_cosets);
    check("b", row.report.correspondence.b, row.expected.b);
    check("q", row.report.correspondence.q, row.expected.q);
    check("dim", row.report.dim_prym, row.expected.dim_prym);
    check("genus", row.report.genus_x, row.expected.genus_x);
    check("top genus", row.report.genus_cover, row.expected.genus_cover);
    if (!row.report.valid) row.mismatches.push_back("engine run not valid");
    row.matches_closed_forms = row.mismatches.empty();
}

}  // namespace detail

inline TableRow table_row(const FamilySpec& spec,
                          std::size_t bound = kDefaultEnumerationBound,
                          const EngineOptions& options = {}) {
    TableRow row;
    row.spec = spec;
    row.label = detail::family_row_label(spec);
    row.expected = closed_form_expectation(spec);
    row.report = run_presentation(family_presentation(spec, bound), options);
    detail::compare_row(row);
    return row;
}

// Every built-in row: single factors, uniform products, and mixed products
// across the three kinds, wide enough to exercise each closed form.
inline std::vector<FamilySpec> builtin_table_specs() {
    using K = FamilyKind;
    const auto sym = [](int n, std::vector<Integer> genera) {
        return uniform_family(K::Symmetric, n, genera);
    };
    const auto alt_dt = [](int n, std::vector<Integer> genera) {
        return uniform_family(K::AlternatingDoubleTranspositions, n, genera);
    };
    const auto alt_3c = [](int n, std::vector<Integer> genera) {
        return uniform_family(K::AlternatingThreeCycles, n, genera);
    };
    std::vector<FamilySpec> specs = {
        // single symmetric factors
        sym(2, {2}),
        sym(2, {3}),
        sym(3, {2}),
        sym(4, {2}),
        sym(4, {3}),
        sym(5, {4}),
        sym(6, {5}),
        sym(7, {6}),
        sym(8, {7}),
        // symmetric pairs
        sym(3, {2, 2}),
        sym(3, {1, 2}),
        sym(4, {3, 3}),
        sym(4, {2, 3}),
        sym(5, {4, 4}),
        sym(5, {1, 4}),
        sym(6, {2, 5}),
        // symmetric triples and a quadruple
        sym(3, {2, 2, 2}),
        sym(3, {1, 1, 2}),
        sym(4, {3, 3, 3}),
        sym(3, {2, 2, 2, 2}),
        // alternating, double-transposition branching
        alt_dt(7, {3}),
        alt_dt(8, {3}),
        alt_dt(9, {4}),
        alt_dt(7, {3, 3}),
        alt_dt(7, {3, 3, 3}),
        // alternating, three-cycle branching
        alt_3c(7, {3}),
        alt_3c(9, {4}),
        alt_3c(7, {3, 3}),
    };
    // mixed products
    FamilySpec mixed_pair;
    mixed_pair.n = 7;
    mixed_pair.factors = {{K::Symmetric, 3},
                          {K::AlternatingDoubleTranspositions, 3}};
    specs.push_back(mixed_pair);
    FamilySpec mixed_pair2;
    mixed_pair2.n = 7;
    mixed_pair2.factors = {{K::Symmetric, 6}, {K::AlternatingThreeCycles, 3}};
    specs.push_back(mixed_pair2);
    FamilySpec mixed_triple;
    mixed_triple.n = 7;
    mixed_triple.factors = {{K::Symmetric, 3},
                            {K::AlternatingDoubleTranspositions, 3},
                            {K::AlternatingThreeCycles, 3}};
    specs.push_back(mixed_triple);
    return specs;
}

// Computes the built-in table, keeping rows whose label contains `filter`
// (all rows when the filter is empty).
inline std::vector<TableRow> reference_table(
    const std::string& filter = "",
    std::size_t bound = kDefaultEnumerationBound,
    const EngineOptions& options = {}) {
    std::vector<TableRow> rows;
    for (const FamilySpec& spec : builtin_table_specs()) {
        TableRow row;
        row.spec = spec;
        row.label = detail::family_row_label(spec);
        if (!filter.empty() && row.label.find(filter) == std::string::npos) {
            continue;
        }
        rows.push_back(table_row(spec, bound, options));
    }
    return rows;
}

}  // namespace prymtyurin
