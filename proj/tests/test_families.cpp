#include <catch2/catch_amalgamated.hpp>

#include <prymtyurin/families.hpp>

#include <string>
#include <vector>

namespace pt = prymtyurin;

namespace {

pt::FamilySpec mixed(int n,
                     std::vector<std::pair<pt::FamilyKind, long long>> parts) {
    pt::FamilySpec spec;
    spec.n = n;
    for (const auto& [kind, genus] : parts) {
        spec.factors.push_back({kind, pt::Integer(genus)});
    }
    return spec;
}

void expect_input_error(const pt::FamilySpec& spec) {
    try {
        pt::validate_family(spec);
        FAIL("expected an input error for " + pt::detail::family_row_label(spec));
    } catch (const pt::Error& e) {
        CHECK(e.kind() == pt::ErrorKind::Input);
    }
}

long long ll(const pt::Integer& x) { return x.convert_to<long long>(); }

} // namespace

TEST_CASE("family gates admit exactly the constructible parameter ranges") {
    using K = pt::FamilyKind;

    // Transposition covers need n >= g + 1 (or the degree-2 special case).
    CHECK(pt::validate_family(mixed(3, {{K::Symmetric, 2}})).empty());
    CHECK(pt::validate_family(mixed(4, {{K::Symmetric, 3}})).empty());
    expect_input_error(mixed(3, {{K::Symmetric, 4}}));
    expect_input_error(mixed(3, {{K::Symmetric, 0}}));
    expect_input_error(mixed(0, {{K::Symmetric, 2}}));

    // Degree 2 carries every genus, with a caveat once the curve must be
    // hyperelliptic (genus 3 and up).
    CHECK(pt::validate_family(mixed(2, {{K::Symmetric, 2}})).empty());
    const auto notes = pt::validate_family(mixed(2, {{K::Symmetric, 5}}));
    REQUIRE(notes.size() == 1);
    CHECK(notes[0].find("hyperelliptic") != std::string::npos);

    // Alternating covers need g >= 3 and n >= 2g + 1.
    CHECK(pt::validate_family(
              mixed(7, {{K::AlternatingDoubleTranspositions, 3}})).empty());
    CHECK(pt::validate_family(
              mixed(9, {{K::AlternatingThreeCycles, 4}})).empty());
    expect_input_error(mixed(7, {{K::AlternatingDoubleTranspositions, 2}}));
    expect_input_error(mixed(7, {{K::AlternatingDoubleTranspositions, 4}}));
    expect_input_error(mixed(8, {{K::AlternatingThreeCycles, 4}}));

    // Every factor of a product must pass its own gate.
    expect_input_error(mixed(7, {{K::Symmetric, 3},
                                 {K::AlternatingDoubleTranspositions, 4}}));
    expect_input_error(mixed(3, {}));

    CHECK(pt::parse_family_kind("sym") == K::Symmetric);
    CHECK(pt::parse_family_kind("alt-dt") == K::AlternatingDoubleTranspositions);
    CHECK(pt::parse_family_kind("alt-3c") == K::AlternatingThreeCycles);
    try {
        pt::parse_family_kind("nonsense");
        FAIL("expected an input error");
    } catch (const pt::Error& e) {
        CHECK(e.kind() == pt::ErrorKind::Input);
    }
}

TEST_CASE("family presentations assemble the advertised pieces") {
    using K = pt::FamilyKind;

    const auto single = pt::family_presentation(mixed(3, {{K::Symmetric, 2}}));
    CHECK(single.group->degree() == 3);
    CHECK(single.group->order() == 6);
    CHECK(single.subgroup.order() == 2);
    CHECK(single.subgroup.contains(pt::Permutation::from_cycles("(1 2)", 3)));
    REQUIRE(single.signature.branches.size() == 1);
    CHECK(single.signature.branches[0].element ==
          pt::Permutation::from_cycles("(1 2)", 3));
    CHECK(single.signature.branches[0].count == 8);  // 2g + 2(n-1)
    CHECK(single.signature.quotient_genus == 0);
    REQUIRE(single.reps.size() == 1);
    CHECK(single.reps[0].kind == pt::RepSpec::Kind::StandardSymmetric);

    const auto pair = pt::family_presentation(
        mixed(7, {{K::Symmetric, 3}, {K::AlternatingDoubleTranspositions, 3}}));
    CHECK(pair.group->is_direct_product());
    CHECK(pair.group->degree() == 14);
    CHECK(pair.group->order() ==
          pt::factorial(7) * (pt::factorial(7) / 2));
    CHECK(pair.subgroup.is_product());
    CHECK(pair.subgroup.order() ==
          pt::factorial(6) * (pt::factorial(6) / 2));
    REQUIRE(pair.reps.size() == 2);
    CHECK(pair.reps[0].kind == pt::RepSpec::Kind::OuterTensor);
    CHECK(pair.reps[0].position == 1);
    CHECK(pair.reps[1].position == 2);
    REQUIRE(pair.signature.branches.size() == 2);
    // Branch counts: symmetric 2g + 2(n-1) = 18, alternating g + n - 1 = 9,
    // with the second factor's element embedded at offset 7.
    CHECK(pair.signature.branches[0].element ==
          pt::Permutation::from_cycles("(1 2)", 14));
    CHECK(pair.signature.branches[0].count == 18);
    CHECK(pair.signature.branches[1].element ==
          pt::Permutation::from_cycles("(8 9)(10 11)", 14));
    CHECK(pair.signature.branches[1].count == 9);

    const auto three_cycles = pt::family_presentation(
        mixed(7, {{K::AlternatingThreeCycles, 3}}));
    CHECK(three_cycles.signature.branches[0].element ==
          pt::Permutation::from_cycles("(1 2 3)", 7));
    CHECK(three_cycles.signature.branches[0].count == 9);
}

TEST_CASE("closed forms reproduce the frozen benchmark rows") {
    using K = pt::FamilyKind;

    const auto s3 = pt::closed_form_expectation(mixed(3, {{K::Symmetric, 2}}));
    CHECK(ll(s3.group_order) == 6);
    CHECK(ll(s3.subgroup_order) == 2);
    CHECK(ll(s3.index) == 3);
    CHECK(ll(s3.double_cosets) == 2);
    CHECK(ll(s3.b) == 3);
    CHECK(ll(s3.q) == 1);
    CHECK(ll(s3.dim_prym) == 2);
    CHECK(ll(s3.genus_x) == 2);
    CHECK(ll(s3.genus_cover) == 7);

    const auto s3sq = pt::closed_form_expectation(
        mixed(3, {{K::Symmetric, 2}, {K::Symmetric, 2}}));
    CHECK(ll(s3sq.index) == 9);
    CHECK(ll(s3sq.double_cosets) == 4);
    CHECK(ll(s3sq.b) == 6);
    CHECK(ll(s3sq.q) == 3);
    CHECK(ll(s3sq.dim_prym) == 4);
    CHECK(ll(s3sq.genus_x) == 16);
    CHECK(ll(s3sq.genus_x_doubled_counts) == 40);
    CHECK(ll(s3sq.genus_cover) == 109);

    const auto a7sq = pt::closed_form_expectation(
        mixed(7, {{K::AlternatingDoubleTranspositions, 3},
                  {K::AlternatingDoubleTranspositions, 3}}));
    CHECK(ll(a7sq.index) == 49);
    CHECK(ll(a7sq.b) == 151200);
    CHECK(ll(a7sq.q) == 7);
    CHECK(ll(a7sq.dim_prym) == 6);
    CHECK(ll(a7sq.genus_x) == 78);
    CHECK(ll(a7sq.genus_x_doubled_counts) == 204);
    CHECK(ll(a7sq.genus_cover) == 22226401);

    // Single alternating factor: b = |H| n / (n-1) = (6!/2) * 7 / 6.
    const auto a7 = pt::closed_form_expectation(
        mixed(7, {{K::AlternatingThreeCycles, 3}}));
    CHECK(ll(a7.b) == 420);
    CHECK(ll(a7.q) == 1);
    CHECK(ll(a7.dim_prym) == 3);
    CHECK(ll(a7.genus_x) == 3);

    // Mixed product at the same degree: the unified coefficient value
    // b = |H| n / (n-1) holds across kinds.
    const auto mixed_pair = pt::closed_form_expectation(
        mixed(7, {{K::Symmetric, 3}, {K::AlternatingDoubleTranspositions, 3}}));
    CHECK(mixed_pair.b == mixed_pair.subgroup_order * 7 / 6);
    CHECK(ll(mixed_pair.b) == 302400);
    CHECK(ll(mixed_pair.q) == 7);
    CHECK(ll(mixed_pair.index) == 49);
    CHECK(ll(mixed_pair.dim_prym) == 6);

    // Degree-2 towers: the hyperelliptic ladder.
    const auto h2 = pt::closed_form_expectation(
        mixed(2, {{K::Symmetric, 2}, {K::Symmetric, 2}}));
    CHECK(ll(h2.index) == 4);
    CHECK(ll(h2.b) == 2);
    CHECK(ll(h2.q) == 2);
    CHECK(ll(h2.dim_prym) == 4);
    CHECK(ll(h2.genus_x) == 9);
}

TEST_CASE("engine output matches the closed forms on representative rows") {
    using K = pt::FamilyKind;

    const auto row = pt::table_row(
        mixed(4, {{K::Symmetric, 2}, {K::Symmetric, 3}}));
    CHECK(row.matches_closed_forms);
    CHECK(row.mismatches.empty());
    CHECK(row.report.valid);
    CHECK(ll(row.expected.index) == 16);
    CHECK(ll(row.report.index) == 16);
    CHECK(ll(row.expected.genus_x) == 29);
    CHECK(ll(row.report.genus_x) == 29);
    CHECK(row.report.correspondence.decomposition.blocks.size() == 4);
    CHECK(row.label == "sym genera (2, 3), n=4");

    const auto single_row = pt::table_row(mixed(5, {{K::Symmetric, 2}}));
    CHECK(single_row.matches_closed_forms);
    CHECK(single_row.label == "sym g=2, n=5");
    CHECK(ll(single_row.report.correspondence.b) == 30);  // 4! * 5/4
    CHECK(ll(single_row.report.correspondence.q) == 1);
}

TEST_CASE("product coefficients decompose over the factor coefficients") {
    using K = pt::FamilyKind;

    const auto s3sq = pt::coefficient_identity_check(
        mixed(3, {{K::Symmetric, 2}, {K::Symmetric, 2}}));
    CHECK(s3sq.matches);
    REQUIRE(s3sq.engine_coefficients.size() == 4);
    CHECK(ll(s3sq.engine_coefficients[0]) == 8);
    CHECK(ll(s3sq.predicted_coefficients[0]) == 8);
    CHECK(ll(s3sq.predicted_coefficients[3]) == -4);

    const auto s4_pair = pt::coefficient_identity_check(
        mixed(4, {{K::Symmetric, 2}, {K::Symmetric, 3}}));
    CHECK(s4_pair.matches);
    REQUIRE(s4_pair.engine_coefficients.size() == 4);

    const auto triple = pt::coefficient_identity_check(
        mixed(3, {{K::Symmetric, 1}, {K::Symmetric, 2}, {K::Symmetric, 2}}));
    CHECK(triple.matches);
    REQUIRE(triple.engine_coefficients.size() == 8);

    const auto mixed_pair = pt::coefficient_identity_check(
        mixed(7, {{K::Symmetric, 3}, {K::AlternatingDoubleTranspositions, 3}}));
    CHECK(mixed_pair.matches);
    REQUIRE(mixed_pair.engine_coefficients.size() == 4);

    // The identity concerns products only.
    try {
        pt::coefficient_identity_check(mixed(3, {{K::Symmetric, 2}}));
        FAIL("expected an input error");
    } catch (const pt::Error& e) {
        CHECK(e.kind() == pt::ErrorKind::Input);
    }
}

TEST_CASE("the built-in table is wide and internally consistent") {
    const auto specs = pt::builtin_table_specs();
    CHECK(specs.size() >= 25);

    // Every spec passes its gate, and the collection exercises all three
    // kinds, products up to arity 4, and mixed rows.
    bool saw_sym = false, saw_dt = false, saw_3c = false, saw_mixed = false;
    std::size_t max_arity = 0;
    for (const auto& spec : specs) {
        CHECK_NOTHROW(pt::validate_family(spec));
        max_arity = std::max(max_arity, spec.factors.size());
        bool any_sym = false, any_alt = false;
        for (const auto& factor : spec.factors) {
            switch (factor.kind) {
                case pt::FamilyKind::Symmetric:
                    saw_sym = any_sym = true;
                    break;
                case pt::FamilyKind::AlternatingDoubleTranspositions:
                    saw_dt = any_alt = true;
                    break;
                case pt::FamilyKind::AlternatingThreeCycles:
                    saw_3c = any_alt = true;
                    break;
            }
        }
        if (any_sym && any_alt) saw_mixed = true;
    }
    CHECK(saw_sym);
    CHECK(saw_dt);
    CHECK(saw_3c);
    CHECK(saw_mixed);
    CHECK(max_arity >= 4);
}

TEST_CASE("table filtering selects rows by label substring") {
    const auto rows = pt::reference_table("sym g=2, n=3");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].label == "sym g=2, n=3");
    CHECK(rows[0].matches_closed_forms);
    CHECK(rows[0].report.valid);

    const auto none = pt::reference_table("no such label");
    CHECK(none.empty());
}
