// Input model for a Prym-Tyurin presentation: the group/subgroup pair, the
// chosen rational irreducible characters, and the geometric signature of the
// Galois action (quotient genus plus branch data).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prymtyurin/characters.hpp"
#include "prymtyurin/numbers.hpp"
#include "prymtyurin/permgroup.hpp"
#include "prymtyurin/permutation.hpp"
#include "prymtyurin/subgroup.hpp"

namespace prymtyurin {

// How one character in the presentation is specified.
struct RepSpec {
    enum class Kind {
        StandardSymmetric,  // fixed-points-minus-one character of a symmetric
                            // or alternating group acting on 1..n
        PermMinusTrivial,   // induced character of the trivial character of
                            // the subgroup, minus the trivial character
        OuterTensor,        // inner character on one factor of a direct
                            // product, trivial on the others
        ExplicitValues,     // raw value per conjugacy class
    };

    Kind kind = Kind::StandardSymmetric;

    // OuterTensor only: 1-based factor position and the shape of the inner
    // character on that factor.
    int position = 0;
    Kind inner_kind = Kind::StandardSymmetric;

    // ExplicitValues only: one value per conjugacy class, in class order.
    std::vector<Rational> values;

    bool operator==(const RepSpec&) const = default;
};

// One branch-point datum: a group element whose cyclic subgroup is the local
// monodromy, together with how many branch points carry it.
struct BranchEntry {
    Permutation element;
    Integer count;

    bool operator==(const BranchEntry&) const = default;
};

// Signature of the group action on the covering curve: genus of the quotient
// and the multiset of branch monodromies.
struct GeometricSignature {
    Integer quotient_genus = 0;
    std::vector<BranchEntry> branches;

    bool operator==(const GeometricSignature&) const = default;
};

// A full presentation: everything the engine needs to compute and check the
// correspondence.  `group_spec`/`subgroup_spec` echo how group and subgroup
// were described so reports and scenario files can round-trip.
struct PresentationInput {
    PermGroupPtr group;
    Subgroup subgroup;
    std::vector<RepSpec> reps;
    GeometricSignature signature;

    GroupSpec group_spec;
    SubgroupSpec subgroup_spec;
};

namespace detail {

inline ClassFunction build_inner_character(const PermGroupPtr& group,
                                           const Subgroup& subgroup,
                                           RepSpec::Kind kind,
                                           const std::vector<Rational>& values) {
    switch (kind) {
        case RepSpec::Kind::StandardSymmetric:
            return standard_character(group);
        case RepSpec::Kind::PermMinusTrivial:
            return perm_minus_trivial_character(group, subgroup);
        case RepSpec::Kind::ExplicitValues:
            return ClassFunction(group, values);
        case RepSpec::Kind::OuterTensor:
            throw_input("an outer-tensor character cannot be nested inside "
                        "another outer-tensor character");
    }
    throw_input("unknown character kind");
}

}  // namespace detail

// Materialize one character from its spec.
inline ClassFunction build_character(const PresentationInput& input,
                                     const RepSpec& spec) {
    const PermGroupPtr& group = input.group;
    if (spec.kind != RepSpec::Kind::OuterTensor) {
        return detail::build_inner_character(group, input.subgroup, spec.kind,
                                             spec.values);
    }
    if (!group->is_direct_product()) {
        throw_input("an outer-tensor character requires a direct-product "
                    "group");
    }
    const auto& factors = group->factors();
    if (spec.position < 1 ||
        static_cast<std::size_t>(spec.position) > factors.size()) {
        throw_input("outer-tensor factor position " +
                    std::to_string(spec.position) + " is outside 1.." +
                    std::to_string(factors.size()));
    }
    const PermGroupPtr& factor = factors[static_cast<std::size_t>(spec.position - 1)];
    Subgroup factor_subgroup = [&]() -> Subgroup {
        if (spec.inner_kind == RepSpec::Kind::PermMinusTrivial) {
            if (!input.subgroup.is_product()) {
                throw_input("an outer-tensor character induced from the "
                            "subgroup requires a product subgroup");
            }
            return input.subgroup.factors()[static_cast<std::size_t>(spec.position - 1)];
        }
        return Subgroup::whole_group(factor);
    }();
    ClassFunction inner = detail::build_inner_character(factor, factor_subgroup,
                                                        spec.inner_kind,
                                                        spec.values);
    return outer_tensor_character(group, spec.position, inner);
}

// Materialize every character of the presentation, in order.
inline std::vector<ClassFunction> build_characters(const PresentationInput& input) {
    std::vector<ClassFunction> chars;
    chars.reserve(input.reps.size());
    for (const RepSpec& spec : input.reps) {
        chars.push_back(build_character(input, spec));
    }
    return chars;
}

// Check the signature against the group: branch elements must be nontrivial
// members of the group, counts positive, the quotient genus zero or more,
// and no two branch entries may have conjugate cyclic monodromy subgroups
// (equal local behaviour must be expressed through the count).
inline void validate_signature(const PermGroupPtr& group,
                               const GeometricSignature& signature) {
    if (signature.quotient_genus < 0) {
        throw_input("quotient genus must be nonnegative, got " +
                    signature.quotient_genus.str());
    }
    const auto& branches = signature.branches;
    for (std::size_t j = 0; j < branches.size(); ++j) {
        const BranchEntry& entry = branches[j];
        if (entry.count <= 0) {
            throw_input("branch point count must be positive, got " +
                        entry.count.str());
        }
        if (entry.element.degree() != group->degree() ||
            !group->contains(entry.element)) {
            throw_input("branch element " + entry.element.cycle_string() +
                        " does not belong to the group");
        }
        if (entry.element.is_identity()) {
            throw_input("branch elements must be nontrivial");
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (cyclic_subgroups_conjugate(group, branches[i].element,
                                           entry.element)) {
                throw_input("branch entries " + std::to_string(i + 1) +
                            " and " + std::to_string(j + 1) +
                            " generate conjugate cyclic subgroups; merge "
                            "them into a single entry with a combined count");
            }
        }
    }
}

// Validate the whole presentation and return its characters.  Throws input
// errors for structurally unusable data; representation-theoretic quality
// (irreducibility, rationality) is reported as check verdicts, not errors.
inline std::vector<ClassFunction> validate_presentation(const PresentationInput& input) {
    if (!input.group) throw_input("presentation has no group");
    if (input.subgroup.ambient().get() != input.group.get()) {
        throw_input("subgroup does not live in the presentation's group");
    }
    if (input.reps.empty()) {
        throw_input("presentation must select at least one character");
    }
    std::vector<ClassFunction> chars = build_characters(input);
    const Rational dim = chars.front().dimension();
    if (!is_integral(dim) || dim <= 0) {
        throw_input("character 1 has non-positive or non-integral dimension " +
                    decimal(dim));
    }
    for (std::size_t k = 0; k < chars.size(); ++k) {
        if (chars[k].is_trivial()) {
            throw_input("character " + std::to_string(k + 1) +
                        " is trivial; the correspondence excludes the "
                        "trivial summand");
        }
        if (chars[k].dimension() != dim) {
            throw_input("character " + std::to_string(k + 1) +
                        " has dimension " + decimal(chars[k].dimension()) +
                        " but character 1 has dimension " + decimal(dim) +
                        "; all selected characters must share one dimension");
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (chars[i] == chars[k]) {
                throw_input("characters " + std::to_string(i + 1) + " and " +
                            std::to_string(k + 1) +
                            " coincide; selected characters must be "
                            "pairwise distinct");
            }
        }
    }
    validate_signature(input.group, input.signature);
    return chars;
}

}  // namespace prymtyurin
