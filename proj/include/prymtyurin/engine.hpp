// The computational core: given a presentation, compute the double-coset
// correspondence, its coefficients and exponent, the matching criterion
// residual, the dimension and genus invariants, and the explicit coset-space
// matrices that certify the projector identities.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prymtyurin/characters.hpp"
#include "prymtyurin/cosets.hpp"
#include "prymtyurin/intmatrix.hpp"
#include "prymtyurin/numbers.hpp"
#include "prymtyurin/permgroup.hpp"
#include "prymtyurin/permutation.hpp"
#include "prymtyurin/presentation.hpp"
#include "prymtyurin/subgroup.hpp"

namespace prymtyurin {

struct EngineOptions {
    // Enumeration limit for explicit coset-space matrices.  A run whose
    // coset space is larger skips the matrix certificates and says so.
    std::size_t matrix_bound = 4096;
};

inline Integer exact_index(const PresentationInput& input) {
    const Integer group_order = input.group->order();
    const Integer subgroup_order = input.subgroup.order();
    if (group_order % subgroup_order != 0) {
        throw_engine("subgroup order " + subgroup_order.str() +
                     " does not divide group order " + group_order.str());
    }
    return group_order / subgroup_order;
}

// ---------------------------------------------------------------------------
// Isotypic condition: every selected character has a one-dimensional fixed
// space under the subgroup, and every proper overgroup of the subgroup kills
// at least one selected character.
// ---------------------------------------------------------------------------

struct IsotypicVerdict {
    bool fixed_dims_ok = false;
    bool maximal = false;
    std::string method;  // "exhaustive", "structural", or "unavailable"
    std::string note;    // witness or explanation when something fails

    bool holds() const { return fixed_dims_ok && maximal; }
};

namespace detail {

// Checks, by enumerating one minimal overgroup <H, g> per nontrivial coset
// representative g, that some character has a zero fixed space on every
// proper overgroup of the subgroup.  `enum_group` must carry an element
// list; the characters may live on any group containing the same elements.
inline bool exhaustive_maximality(const PermGroup& enum_group,
                                  const Subgroup& enum_subgroup,
                                  const std::vector<ClassFunction>& chars,
                                  std::string& witness) {
    const CosetTable lefts = left_cosets(enum_group, enum_subgroup);
    std::vector<Permutation> gens = enum_subgroup.generators();
    gens.push_back(Permutation::identity(enum_group.degree()));
    const std::size_t slot = gens.size() - 1;
    for (const std::size_t rep_idx : lefts.rep_index) {
        const Permutation& g = enum_group.elements()[rep_idx];
        if (enum_subgroup.contains(g)) continue;
        gens[slot] = g;
        const std::vector<Permutation> overgroup =
            closure(enum_group.degree(), gens, enum_group.elements().size(),
                    "overgroup enumeration");
        bool killed = false;
        for (const ClassFunction& chi : chars) {
            Rational total = 0;
            for (const Permutation& x : overgroup) total += chi.value_at(x);
            if (total == 0) {
                killed = true;
                break;
            }
        }
        if (!killed) {
            witness = g.cycle_string();
            return false;
        }
    }
    return true;
}

}  // namespace detail

inline IsotypicVerdict isotypic_condition(const PresentationInput& input,
                                          const std::vector<ClassFunction>& chars) {
    IsotypicVerdict verdict;
    verdict.fixed_dims_ok = true;
    for (std::size_t k = 0; k < chars.size(); ++k) {
        const Integer fixed = fixed_space_dim(chars[k], input.subgroup);
        if (fixed != 1) {
            verdict.fixed_dims_ok = false;
            verdict.note = "character " + std::to_string(k + 1) +
                           " has fixed-space dimension " + fixed.str() +
                           " over the subgroup (expected 1)";
            break;
        }
    }

    // Exhaustive route: enumerate the group (flattening a product if it is
    // small enough) and test one minimal overgroup per coset.
    PermGroupPtr flat;
    try {
        flat = input.group->flattened();
    } catch (const Error& error) {
        if (error.kind() != ErrorKind::Resource) throw;
    }
    if (flat) {
        const Subgroup enum_subgroup =
            input.group->is_direct_product() ? rebuild_on(flat, input.subgroup)
                                             : input.subgroup;
        std::string witness;
        verdict.maximal =
            detail::exhaustive_maximality(*flat, enum_subgroup, chars, witness);
        verdict.method = "exhaustive";
        if (!verdict.maximal) {
            verdict.note = (verdict.note.empty() ? "" : verdict.note + "; ") +
                           std::string("every selected character keeps a fixed "
                                       "vector on the overgroup generated by the "
                                       "subgroup and ") +
                           witness;
        }
        return verdict;
    }

    // Structural route for products too large to enumerate.  Any proper
    // overgroup of a product subgroup projects onto a proper overgroup of
    // some factor subgroup, and a factor-supported character has the same
    // fixed-space dimension on the projection, so per-factor exhaustive
    // maximality certifies the whole product.
    verdict.method = "structural";
    const auto fail = [&](const std::string& why) {
        verdict.maximal = false;
        verdict.note = (verdict.note.empty() ? "" : verdict.note + "; ") + why;
    };
    if (!input.subgroup.is_product()) {
        fail("maximality unverifiable: the group is too large to enumerate and "
             "the subgroup is not given factor by factor");
        return verdict;
    }
    const auto& group_factors = input.group->factors();
    const auto& sub_factors = input.subgroup.factors();
    std::vector<std::vector<ClassFunction>> per_factor(group_factors.size());
    for (const RepSpec& spec : input.reps) {
        if (spec.kind != RepSpec::Kind::OuterTensor) {
            fail("maximality unverifiable: a character is not supported on a "
                 "single factor of the unenumerable product");
            return verdict;
        }
        const auto pos = static_cast<std::size_t>(spec.position - 1);
        per_factor[pos].push_back(detail::build_inner_character(
            group_factors[pos], sub_factors[pos], spec.inner_kind, spec.values));
    }
    for (std::size_t f = 0; f < group_factors.size(); ++f) {
        if (per_factor[f].empty()) {
            fail("maximality unverifiable: no selected character is supported "
                 "on factor " + std::to_string(f + 1));
            return verdict;
        }
        std::string witness;
        if (!detail::exhaustive_maximality(*group_factors[f], sub_factors[f],
                                           per_factor[f], witness)) {
            fail("factor " + std::to_string(f + 1) +
                 ": every character supported there keeps a fixed vector on "
                 "the overgroup generated by the factor subgroup and " + witness);
            return verdict;
        }
    }
    verdict.maximal = true;
    verdict.note = "certified factor by factor: a proper overgroup of the "
                   "product subgroup projects onto a proper factor overgroup, "
                   "where some selected character has no invariants";
    return verdict;
}

// ---------------------------------------------------------------------------
// Correspondence coefficients, their gcd, and the exponent.
// ---------------------------------------------------------------------------

struct CorrespondenceData {
    DoubleCosetDecomposition decomposition;
    std::vector<Integer> coefficients;  // one per double coset, same order
    Integer b;              // gcd of the coefficient differences to block 1
    Integer q;              // |G| / (b * dim), the exponent
    Integer rep_dimension;  // shared dimension of the selected characters
};

inline CorrespondenceData correspondence_coefficients(
    const PresentationInput& input, const std::vector<ClassFunction>& chars) {
    CorrespondenceData data;
    data.decomposition = simultaneous_double_cosets(input.group, input.subgroup);
    const auto& blocks = data.decomposition.blocks;
    if (blocks.size() < 2) {
        throw_engine("the subgroup has a single double coset, so every "
                     "correspondence coefficient coincides and no exponent "
                     "exists");
    }
    data.rep_dimension =
        require_integral(chars.front().dimension(), "character dimension");
    data.coefficients.reserve(blocks.size());
    for (const DoubleCosetBlock& block : blocks) {
        const Permutation translate = block.representative.inverse();
        Rational sum = 0;
        for (const ClassFunction& chi : chars) {
            sum += character_sum_over_translate(chi, input.subgroup, translate);
        }
        data.coefficients.push_back(
            require_integral(sum, "correspondence coefficient"));
    }
    Integer spread = 0;
    for (std::size_t i = 1; i < data.coefficients.size(); ++i) {
        spread = positive_gcd(spread,
                              data.coefficients.front() - data.coefficients[i]);
    }
    if (spread == 0) {
        throw_engine("all correspondence coefficients are equal, so the "
                     "induced endomorphism is a multiple of the identity and "
                     "carries no exponent");
    }
    data.b = spread;
    const Integer denominator = data.b * data.rep_dimension;
    const Integer group_order = input.group->order();
    if (group_order % denominator != 0) {
        throw_engine("group order " + group_order.str() +
                     " is not divisible by b * dim = " + denominator.str() +
                     ", so the exponent is not an integer");
    }
    data.q = group_order / denominator;
    return data;
}

// ---------------------------------------------------------------------------
// Matching criterion and the numeric invariants.
// ---------------------------------------------------------------------------

// Signed residual of the branch-by-branch matching identity for a genus-zero
// quotient.  Zero means the correspondence cuts out exactly the selected
// isotypic pieces; the sign and size of a nonzero value localize the defect.
inline Integer criterion_residual(const PresentationInput& input,
                                  const std::vector<ClassFunction>& chars,
                                  const Integer& q) {
    if (input.signature.quotient_genus != 0) {
        throw_engine("the matching criterion is only evaluated over a "
                     "genus-zero quotient");
    }
    const Integer index = exact_index(input);
    Integer residual = 0;
    for (const BranchEntry& entry : input.signature.branches) {
        const Subgroup local = Subgroup::cyclic(input.group, entry.element);
        Integer deficit = 0;
        for (const ClassFunction& chi : chars) {
            deficit += require_integral(chi.dimension(), "character dimension") -
                       fixed_space_dim(chi, local);
        }
        const Integer blocks =
            double_coset_count(input.group, input.subgroup, local);
        residual += entry.count * (q * deficit - (index - blocks));
    }
    return residual;
}

// Dimension of the distinguished abelian subvariety: the sum over selected
// characters of their multiplicities in the space of holomorphic forms
// upstairs.  May legitimately come out nonpositive for inconsistent input;
// the caller decides how to flag that.
inline Integer prym_dimension(const PresentationInput& input,
                              const std::vector<ClassFunction>& chars) {
    Rational total = 0;
    for (const ClassFunction& chi : chars) {
        Rational contribution =
            chi.dimension() * (Rational(input.signature.quotient_genus) - 1);
        for (const BranchEntry& entry : input.signature.branches) {
            const Subgroup local = Subgroup::cyclic(input.group, entry.element);
            contribution += Rational(entry.count) *
                            (chi.dimension() -
                             Rational(fixed_space_dim(chi, local))) /
                            2;
        }
        total += contribution;
    }
    return require_integral(total,
                            "dimension of the distinguished abelian subvariety");
}

// Genus of the intermediate curve (quotient by the subgroup), from the
// branch data of the cover it inherits.
inline Integer quotient_genus_x(const PresentationInput& input) {
    const Integer index = exact_index(input);
    Rational genus =
        1 + Rational(index) * (Rational(input.signature.quotient_genus) - 1);
    for (const BranchEntry& entry : input.signature.branches) {
        const Subgroup local = Subgroup::cyclic(input.group, entry.element);
        const Integer blocks =
            double_coset_count(input.group, input.subgroup, local);
        genus += Rational(entry.count) * Rational(index - blocks) / 2;
    }
    const Integer result = require_integral(genus, "intermediate curve genus");
    if (result < 0) {
        throw_engine("intermediate curve genus " + result.str() +
                     " is negative: the signature is not geometrically "
                     "consistent with this subgroup");
    }
    return result;
}

// Genus of the top curve carrying the full group action.
inline Integer galois_cover_genus(const PermGroupPtr& group,
                                  const GeometricSignature& signature) {
    const Integer order = group->order();
    Rational genus =
        1 + Rational(order) * (Rational(signature.quotient_genus) - 1);
    for (const BranchEntry& entry : signature.branches) {
        const long long local_order = entry.element.element_order();
        genus += Rational(entry.count) * Rational(order) *
                 (1 - Rational(1, local_order)) / 2;
    }
    const Integer result = require_integral(genus, "top curve genus");
    if (result < 0) {
        throw_engine("top curve genus " + result.str() +
                     " is negative: the signature is not geometrically "
                     "consistent");
    }
    return result;
}

// ---------------------------------------------------------------------------
// Explicit coset-space matrices: the correspondence matrix and the group
// action it must commute with.
// ---------------------------------------------------------------------------

struct HeckeStructure {
    bool built = false;
    std::string skip_reason;
    std::size_t size = 0;
    IntMatrix matrix{0, 0};
    // Left translation by each group generator as a coset permutation:
    // coset_actions[g][u] is the coset of generator_g * x_u.
    std::vector<std::vector<std::size_t>> coset_actions;
};

// The permutation matrix of one coset action (P[u][sigma(u)] = 1), for
// callers that want the commutation statement as literal matrix products.
inline IntMatrix action_matrix(const std::vector<std::size_t>& sigma) {
    IntMatrix out(sigma.size(), sigma.size());
    for (std::size_t u = 0; u < sigma.size(); ++u) out.at(u, sigma[u]) = 1;
    return out;
}

namespace detail {

// Maps each left coset to its double-coset block: the simultaneous
// representatives hit every left coset of a block exactly once.
inline std::vector<std::size_t> left_coset_blocks(
    const PermGroup& group, const CosetTable& lefts,
    const DoubleCosetDecomposition& decomposition) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(lefts.rep_index.size(), unset);
    for (std::size_t bid = 0; bid < decomposition.blocks.size(); ++bid) {
        for (const Permutation& rep : decomposition.blocks[bid].two_sided_reps) {
            block_of[lefts.coset_of[*group.element_index(rep)]] = bid;
        }
    }
    for (const std::size_t bid : block_of) {
        if (bid == unset) {
            throw_engine("a left coset is not covered by the simultaneous "
                         "double-coset representatives");
        }
    }
    return block_of;
}

inline HeckeStructure hecke_plain(const PermGroup& group,
                                  const Subgroup& subgroup,
                                  const DoubleCosetDecomposition& decomposition,
                                  const std::vector<Integer>& coefficients,
                                  const std::vector<Permutation>& action_gens) {
    const CosetTable lefts = left_cosets(group, subgroup);
    const std::size_t n = lefts.rep_index.size();
    const std::vector<std::size_t> block_of =
        left_coset_blocks(group, lefts, decomposition);

    std::vector<Permutation> transversal;
    std::vector<Permutation> inverses;
    transversal.reserve(n);
    inverses.reserve(n);
    for (const std::size_t idx : lefts.rep_index) {
        transversal.push_back(group.elements()[idx]);
        inverses.push_back(transversal.back().inverse());
    }

    HeckeStructure structure;
    structure.built = true;
    structure.size = n;
    structure.matrix = IntMatrix(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            const Permutation step = inverses[u] * transversal[v];
            const std::uint32_t coset = lefts.coset_of[*group.element_index(step)];
            structure.matrix.at(u, v) = coefficients[block_of[coset]];
        }
    }
    for (const Permutation& g : action_gens) {
        std::vector<std::size_t> action(n);
        for (std::size_t u = 0; u < n; ++u) {
            const Permutation moved = g * transversal[u];
            action[u] = lefts.coset_of[*group.element_index(moved)];
        }
        structure.coset_actions.push_back(std::move(action));
    }
    return structure;
}

inline HeckeStructure hecke_product(const PermGroupPtr& group,
                                    const Subgroup& subgroup,
                                    const std::vector<Integer>& coefficients,
                                    std::size_t total_size) {
    const auto& factors = group->factors();
    const auto& sub_factors = subgroup.factors();
    const std::size_t arity = factors.size();

    struct FactorTables {
        CosetTable lefts;
        std::vector<std::size_t> block_of;
        std::vector<Permutation> transversal;
        std::vector<Permutation> inverses;
        std::size_t coset_count = 0;
        std::size_t block_count = 0;
    };
    std::vector<FactorTables> tables(arity);
    for (std::size_t f = 0; f < arity; ++f) {
        FactorTables& t = tables[f];
        const PermGroup& fg = *factors[f];
        t.lefts = left_cosets(fg, sub_factors[f]);
        const DoubleCosetDecomposition part =
            simultaneous_double_cosets(factors[f], sub_factors[f]);
        t.block_of = left_coset_blocks(fg, t.lefts, part);
        t.coset_count = t.lefts.rep_index.size();
        t.block_count = part.blocks.size();
        for (const std::size_t idx : t.lefts.rep_index) {
            t.transversal.push_back(fg.elements()[idx]);
            t.inverses.push_back(t.transversal.back().inverse());
        }
    }

    // Row-major strides (first factor is the major index) for both the coset
    // multi-index and the double-coset block multi-index, matching the order
    // in which the product decomposition lists its blocks.
    std::vector<std::size_t> coset_stride(arity, 1);
    std::vector<std::size_t> block_stride(arity, 1);
    for (std::size_t f = arity; f-- > 1;) {
        coset_stride[f - 1] = coset_stride[f] * tables[f].coset_count;
        block_stride[f - 1] = block_stride[f] * tables[f].block_count;
    }

    const auto split = [&](std::size_t u, std::vector<std::size_t>& parts) {
        for (std::size_t f = 0; f < arity; ++f) {
            parts[f] = u / coset_stride[f];
            u %= coset_stride[f];
        }
    };

    HeckeStructure structure;
    structure.built = true;
    structure.size = total_size;
    structure.matrix = IntMatrix(total_size, total_size);
    std::vector<std::size_t> us(arity), vs(arity);
    for (std::size_t u = 0; u < total_size; ++u) {
        split(u, us);
        for (std::size_t v = 0; v < total_size; ++v) {
            split(v, vs);
            std::size_t block = 0;
            for (std::size_t f = 0; f < arity; ++f) {
                const FactorTables& t = tables[f];
                const Permutation step = t.inverses[us[f]] * t.transversal[vs[f]];
                const std::uint32_t coset =
                    t.lefts.coset_of[*factors[f]->element_index(step)];
                block += t.block_of[coset] * block_stride[f];
            }
            structure.matrix.at(u, v) = coefficients[block];
        }
    }

    const auto& offsets = group->factor_offsets();
    const auto& lengths = group->factor_degrees();
    for (const Permutation& g : group->generators()) {
        if (g.is_identity()) continue;
        const std::vector<int> moved = moved_blocks(g, offsets, lengths);
        if (moved.size() != 1) {
            throw_engine("a product group generator is not supported on a "
                         "single factor");
        }
        const auto f = static_cast<std::size_t>(moved.front());
        const Permutation local =
            restrict_to_block(g, offsets[f], lengths[f]);
        std::vector<std::size_t> action(total_size);
        for (std::size_t u = 0; u < total_size; ++u) {
            split(u, us);
            const Permutation stepped = local * tables[f].transversal[us[f]];
            const std::uint32_t target =
                tables[f].lefts.coset_of[*factors[f]->element_index(stepped)];
            action[u] =
                u + (static_cast<std::size_t>(target) - us[f]) * coset_stride[f];
        }
        structure.coset_actions.push_back(std::move(action));
    }
    return structure;
}

}  // namespace detail

// Builds the correspondence matrix on the left-coset space together with the
// permutation action of each group generator, unless the space exceeds the
// matrix bound (in which case the structure says why it was skipped).
inline HeckeStructure hecke_structure(const PresentationInput& input,
                                      const DoubleCosetDecomposition& decomposition,
                                      const std::vector<Integer>& coefficients,
                                      const EngineOptions& options = {}) {
    HeckeStructure structure;
    if (decomposition.index > options.matrix_bound) {
        structure.skip_reason =
            "coset space of size " + decomposition.index.str() +
            " exceeds the matrix bound of " + std::to_string(options.matrix_bound);
        return structure;
    }
    const auto size = static_cast<std::size_t>(decomposition.index);
    if (!input.group->is_direct_product()) {
        return detail::hecke_plain(*input.group, input.subgroup, decomposition,
                                   coefficients, input.group->generators());
    }
    if (input.subgroup.is_product()) {
        return detail::hecke_product(input.group, input.subgroup, coefficients,
                                     size);
    }
    PermGroupPtr flat;
    try {
        flat = input.group->flattened();
    } catch (const Error& error) {
        if (error.kind() != ErrorKind::Resource) throw;
        structure.skip_reason =
            "the group is too large to enumerate and the subgroup is not "
            "given factor by factor";
        return structure;
    }
    return detail::hecke_plain(*flat, rebuild_on(flat, input.subgroup),
                               decomposition, coefficients, flat->generators());
}

struct ProjectorVerdict {
    bool evaluated = false;
    std::string skip_reason;
    bool square_identity = false;  // M * M == (b q) M
    bool commutes = false;         // M commutes with the group action
    bool rank_matches = false;     // rank M == sum of selected dimensions
    Integer rank{0};
    Integer expected_rank{0};

    bool passes() const { return square_identity && commutes && rank_matches; }
};

inline ProjectorVerdict projector_checks(const HeckeStructure& structure,
                                         const Integer& b, const Integer& q,
                                         const Integer& expected_rank) {
    ProjectorVerdict verdict;
    verdict.expected_rank = expected_rank;
    if (!structure.built) {
        verdict.skip_reason = structure.skip_reason;
        return verdict;
    }
    verdict.evaluated = true;
    const IntMatrix& m = structure.matrix;
    verdict.square_identity = (m * m == m.scaled(b * q));
    // P M = M P for a permutation action P if and only if M is invariant
    // under relabeling both sides: M[s(u)][s(v)] == M[u][v].
    verdict.commutes = true;
    for (const std::vector<std::size_t>& sigma : structure.coset_actions) {
        for (std::size_t u = 0; verdict.commutes && u < structure.size; ++u) {
            for (std::size_t v = 0; v < structure.size; ++v) {
                if (m.at(sigma[u], sigma[v]) != m.at(u, v)) {
                    verdict.commutes = false;
                    break;
                }
            }
        }
        if (!verdict.commutes) break;
    }
    verdict.rank = rank_fraction_free(m);
    verdict.rank_matches = (verdict.rank == expected_rank);
    return verdict;
}

// ---------------------------------------------------------------------------
// Full run.
// ---------------------------------------------------------------------------

struct ChecksSummary {
    std::vector<IrreducibilityVerdict> rep_verdicts;
    bool reps_ok = false;
    IsotypicVerdict isotypic;
    bool criterion_evaluated = false;
    bool criterion_ok = false;
    bool dimension_positive = false;
    ProjectorVerdict projector;
};

struct PrymReport {
    Integer group_order;
    Integer subgroup_order;
    Integer index;
    CorrespondenceData correspondence;
    Integer criterion_residual{0};
    Integer dim_prym{0};
    Integer genus_x{0};
    Integer genus_cover{0};
    ChecksSummary checks;
    std::vector<std::string> notes;
    bool valid = false;
};

inline PrymReport run_presentation(const PresentationInput& input,
                                   const EngineOptions& options = {}) {
    PrymReport report;
    const std::vector<ClassFunction> chars = validate_presentation(input);
    report.group_order = input.group->order();
    report.subgroup_order = input.subgroup.order();
    report.index = exact_index(input);

    report.checks.reps_ok = true;
    for (const ClassFunction& chi : chars) {
        const IrreducibilityVerdict verdict = is_valid_irreducible(chi);
        if (!verdict.irreducible || verdict.trivial) {
            report.checks.reps_ok = false;
        }
        report.checks.rep_verdicts.push_back(verdict);
    }

    report.checks.isotypic = isotypic_condition(input, chars);
    if (!report.checks.isotypic.note.empty()) {
        report.notes.push_back("isotypic condition: " +
                               report.checks.isotypic.note);
    }

    report.correspondence = correspondence_coefficients(input, chars);
    const Integer& b = report.correspondence.b;
    const Integer& q = report.correspondence.q;

    if (input.signature.quotient_genus == 0) {
        report.checks.criterion_evaluated = true;
        report.criterion_residual = criterion_residual(input, chars, q);
        report.checks.criterion_ok = (report.criterion_residual == 0);
    } else {
        report.notes.push_back(
            "matching criterion not evaluated: positive quotient genus");
    }

    report.dim_prym = prym_dimension(input, chars);
    report.checks.dimension_positive = (report.dim_prym > 0);
    report.genus_x = quotient_genus_x(input);
    report.genus_cover = galois_cover_genus(input.group, input.signature);

    const HeckeStructure structure = hecke_structure(
        input, report.correspondence.decomposition,
        report.correspondence.coefficients, options);
    const Integer expected_rank =
        Integer(chars.size()) * report.correspondence.rep_dimension;
    report.checks.projector = projector_checks(structure, b, q, expected_rank);
    if (!report.checks.projector.evaluated) {
        report.notes.push_back("matrix certificates skipped: " +
                               report.checks.projector.skip_reason);
    }

    report.valid =
        report.checks.reps_ok && report.checks.isotypic.holds() &&
        report.checks.dimension_positive &&
        (!report.checks.criterion_evaluated || report.checks.criterion_ok) &&
        (!report.checks.projector.evaluated ||
         report.checks.projector.passes());
    return report;
}

}  // namespace prymtyurin
