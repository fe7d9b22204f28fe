#ifndef PRYMTYURIN_CHARACTERS_HPP
#define PRYMTYURIN_CHARACTERS_HPP

// Exact rational class functions and the character operations the engine
// needs: permutation characters, induced trivial characters, inner products,
// fixed-space dimensions, and subgroup-translated character sums.
//
// A ClassFunction stores one rational value per conjugacy class in the
// canonical class order of its group.  On direct products the classes are
// factor-class tuples (row-major), and the two heavy sums
//     dim V^S = (1/|S|) sum_{s in S} chi(s)      and
//     sum_{h in S} chi(h t)
// factor through per-coordinate class counts, so subgroups of the shape
// S = S_1 x ... x S_m never need |S| to be enumerated.

#include "cosets.hpp"
#include "numbers.hpp"
#include "permgroup.hpp"
#include "permutation.hpp"
#include "subgroup.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace prymtyurin {

class ClassFunction {
public:
    ClassFunction(PermGroupPtr group, std::vector<Rational> values)
        : group_(std::move(group)), values_(std::move(values)) {
        if (values_.size() != group_->class_count()) {
            throw_input("class function has " + std::to_string(values_.size()) +
                        " values but the group has " +
                        std::to_string(group_->class_count()) +
                        " conjugacy classes");
        }
    }

    static ClassFunction trivial(PermGroupPtr group) {
        std::vector<Rational> values(group->class_count(), Rational(1));
        return ClassFunction(std::move(group), std::move(values));
    }

    const PermGroupPtr& group() const { return group_; }
    std::size_t size() const { return values_.size(); }
    const Rational& value(std::size_t class_index) const {
        return values_[class_index];
    }
    const std::vector<Rational>& values() const { return values_; }

    const Rational& value_at(const Permutation& p) const {
        return values_[group_->class_index_of(p)];
    }

    // The identity class is always class 0 (its representative is the
    // lexicographically smallest element of the whole group).
    const Rational& dimension() const { return values_[0]; }

    bool is_trivial() const {
        for (const Rational& v : values_) {
            if (v != 1) return false;
        }
        return true;
    }

    bool integer_valued() const {
        for (const Rational& v : values_) {
            if (!is_integral(v)) return false;
        }
        return true;
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.group_.get() == b.group_.get() && a.values_ == b.values_;
    }

    ClassFunction operator+(const ClassFunction& rhs) const {
        require_same_group(rhs);
        std::vector<Rational> values(values_);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += rhs.values_[i];
        return ClassFunction(group_, std::move(values));
    }

    ClassFunction operator-(const ClassFunction& rhs) const {
        require_same_group(rhs);
        std::vector<Rational> values(values_);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] -= rhs.values_[i];
        return ClassFunction(group_, std::move(values));
    }

private:
    void require_same_group(const ClassFunction& rhs) const {
        if (group_.get() != rhs.group_.get()) {
            throw_input("class functions live on different groups");
        }
    }

    PermGroupPtr group_;
    std::vector<Rational> values_;
};

// Character of the natural action on points: number of fixed points.
inline ClassFunction natural_permutation_character(const PermGroupPtr& group) {
    std::vector<Rational> values;
    values.reserve(group->class_count());
    for (std::size_t i = 0; i < group->class_count(); ++i) {
        values.emplace_back(group->class_representative(i).fixed_point_count());
    }
    return ClassFunction(group, std::move(values));
}

// fix(g) - 1 on the natural points; the standard character when the group is
// the full symmetric group.
inline ClassFunction standard_character(const PermGroupPtr& group) {
    if (group->is_direct_product()) {
        throw_input("the standard character is defined on a plain group; use an "
                    "outer tensor for products");
    }
    std::vector<Rational> values;
    values.reserve(group->class_count());
    for (std::size_t i = 0; i < group->class_count(); ++i) {
        values.emplace_back(group->class_representative(i).fixed_point_count() - 1);
    }
    return ClassFunction(group, std::move(values));
}

// Character of the action of G on the left cosets of H (the trivial
// character of H induced to G): the value at g counts cosets xH with
// x^{-1} g x in H.  Product subgroups of product groups multiply per factor.
inline ClassFunction induced_trivial_character(const PermGroupPtr& group,
                                               const Subgroup& subgroup) {
    if (group->is_direct_product() && subgroup.is_product()) {
        const std::size_t m = group->factors().size();
        std::vector<ClassFunction> parts;
        parts.reserve(m);
        for (std::size_t b = 0; b < m; ++b) {
            parts.push_back(induced_trivial_character(group->factors()[b],
                                                      subgroup.factors()[b]));
        }
        std::vector<Rational> values;
        values.reserve(group->class_count());
        std::vector<std::size_t> strides(m, 1);
        for (std::size_t b = m; b-- > 1;) {
            strides[b - 1] = strides[b] * parts[b].size();
        }
        for (std::size_t idx = 0; idx < group->class_count(); ++idx) {
            Rational v = 1;
            for (std::size_t b = 0; b < m; ++b) {
                v *= parts[b].value((idx / strides[b]) % parts[b].size());
            }
            values.push_back(std::move(v));
        }
        return ClassFunction(group, std::move(values));
    }
    const PermGroupPtr plain =
        group->is_direct_product() ? group->flattened() : group;
    const Subgroup h = group->is_direct_product() ? rebuild_on(plain, subgroup)
                                                  : subgroup;
    const CosetTable cosets = left_cosets(*plain, h);
    std::vector<Rational> values;
    values.reserve(plain->class_count());
    for (std::size_t i = 0; i < plain->class_count(); ++i) {
        const Permutation g = plain->class_representative(i);
        long long fixed = 0;
        for (const std::size_t rep_idx : cosets.rep_index) {
            const Permutation& x = plain->elements()[rep_idx];
            if (h.contains(x.inverse() * g * x)) ++fixed;
        }
        values.emplace_back(fixed);
    }
    // When we flattened, re-thread the values onto the product's class order.
    if (!group->is_direct_product()) {
        return ClassFunction(group, std::move(values));
    }
    ClassFunction on_flat(plain, std::move(values));
    std::vector<Rational> on_product;
    on_product.reserve(group->class_count());
    for (std::size_t i = 0; i < group->class_count(); ++i) {
        on_product.push_back(on_flat.value_at(group->class_representative(i)));
    }
    return ClassFunction(group, std::move(on_product));
}

// Induced trivial character minus the trivial character - the standard
// representation of a doubly transitive action, e.g. alternating groups on
// their natural points with a point stabilizer.
inline ClassFunction perm_minus_trivial_character(const PermGroupPtr& group,
                                                  const Subgroup& subgroup) {
    ClassFunction induced = induced_trivial_character(group, subgroup);
    return induced - ClassFunction::trivial(group);
}

// chi in coordinate `position` (1-based), trivial in every other coordinate.
inline ClassFunction outer_tensor_character(const PermGroupPtr& group,
                                            int position,
                                            const ClassFunction& inner) {
    if (!group->is_direct_product()) {
        throw_input("outer tensor characters require a direct-product group");
    }
    const std::size_t m = group->factors().size();
    if (position < 1 || static_cast<std::size_t>(position) > m) {
        throw_input("outer tensor position " + std::to_string(position) +
                    " is outside 1.." + std::to_string(m));
    }
    const std::size_t b0 = static_cast<std::size_t>(position - 1);
    if (inner.group().get() != group->factors()[b0].get()) {
        throw_input("outer tensor inner character does not live on factor " +
                    std::to_string(position));
    }
    std::vector<std::size_t> strides(m, 1);
    for (std::size_t b = m; b-- > 1;) {
        strides[b - 1] = strides[b] * group->factors()[b]->class_count();
    }
    std::vector<Rational> values;
    values.reserve(group->class_count());
    for (std::size_t idx = 0; idx < group->class_count(); ++idx) {
        values.push_back(
            inner.value((idx / strides[b0]) % group->factors()[b0]->class_count()));
    }
    return ClassFunction(group, std::move(values));
}

// <chi, psi> = (1/|G|) sum over classes  |class| * chi * psi  (all values are
// rational, hence real, so no conjugation is involved).
inline Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.group().get() != b.group().get()) {
        throw_input("inner product requires class functions on the same group");
    }
    const PermGroupPtr& group = a.group();
    Rational sum = 0;
    for (std::size_t i = 0; i < group->class_count(); ++i) {
        sum += Rational(group->class_size(i)) * a.value(i) * b.value(i);
    }
    return sum / Rational(group->order());
}

namespace detail {

// Number of elements of `subgroup` (translated by t on the right when given)
// in each conjugacy class of the plain group `group`.
inline std::vector<Integer> class_counts_plain(const PermGroupPtr& group,
                                               const Subgroup& subgroup,
                                               const Permutation* translate) {
    std::vector<Integer> counts(group->class_count(), Integer(0));
    for (const Permutation& h : subgroup.elements()) {
        const std::size_t cls = translate != nullptr
                                    ? group->class_index_of(h * *translate)
                                    : group->class_index_of(h);
        ++counts[cls];
    }
    return counts;
}

// sum_{h in S} chi(h * t)  with t = identity when translate == nullptr.
inline Rational translated_character_sum(const ClassFunction& chi,
                                         const Subgroup& subgroup,
                                         const Permutation* translate) {
    const PermGroupPtr& group = chi.group();
    if (subgroup.ambient().get() != group.get()) {
        throw_input("subgroup does not live in the class function's group");
    }
    if (subgroup.has_element_list()) {
        Rational sum = 0;
        if (translate != nullptr) {
            for (const Permutation& h : subgroup.elements()) {
                sum += chi.value_at(h * *translate);
            }
        } else {
            for (const Permutation& h : subgroup.elements()) {
                sum += chi.value_at(h);
            }
        }
        return sum;
    }
    if (!group->is_direct_product() || !subgroup.is_product()) {
        throw_resource("character sum needs either an element list or a "
                       "product-structured subgroup");
    }
    // Per-coordinate class counts of { h * t : h in S_b }, contracted against
    // the class-function values over all factor-class tuples.
    const std::size_t m = group->factors().size();
    std::vector<std::vector<Integer>> counts;
    counts.reserve(m);
    for (std::size_t b = 0; b < m; ++b) {
        const Permutation t_b =
            translate != nullptr
                ? restrict_to_block(*translate, group->factor_offsets()[b],
                                    group->factor_degrees()[b])
                : Permutation::identity(group->factor_degrees()[b]);
        const Permutation* t_ptr = translate != nullptr ? &t_b : nullptr;
        counts.push_back(class_counts_plain(group->factors()[b],
                                            subgroup.factors()[b], t_ptr));
    }
    std::vector<std::size_t> strides(m, 1);
    for (std::size_t b = m; b-- > 1;) {
        strides[b - 1] = strides[b] * group->factors()[b]->class_count();
    }
    Rational sum = 0;
    for (std::size_t idx = 0; idx < group->class_count(); ++idx) {
        Integer weight = 1;
        for (std::size_t b = 0; b < m; ++b) {
            const Integer& c =
                counts[b][(idx / strides[b]) % group->factors()[b]->class_count()];
            if (c == 0) {
                weight = 0;
                break;
            }
            weight *= c;
        }
        if (weight != 0) sum += chi.value(idx) * Rational(weight);
    }
    return sum;
}

} // namespace detail

// sum_{h in S} chi(h * t), exact.
inline Rational character_sum_over_translate(const ClassFunction& chi,
                                             const Subgroup& subgroup,
                                             const Permutation& translate) {
    return detail::translated_character_sum(chi, subgroup, &translate);
}

// dim V^S = (1/|S|) sum_{s in S} chi(s).  A non-integral average means chi is
// not a character on S, which is an engine error.
inline Integer fixed_space_dim(const ClassFunction& chi, const Subgroup& subgroup) {
    const Rational average =
        detail::translated_character_sum(chi, subgroup, nullptr) /
        Rational(subgroup.order());
    return require_integral(average,
                            "fixed-space dimension (the class function is not a "
                            "character on this subgroup)");
}

struct IrreducibilityVerdict {
    bool irreducible = false;   // <chi, chi> = 1 and integer-valued
    bool trivial = false;       // chi == 1 everywhere (valid but unusable here)
    bool integer_valued = false;
};

inline IrreducibilityVerdict is_valid_irreducible(const ClassFunction& chi) {
    IrreducibilityVerdict verdict;
    verdict.integer_valued = chi.integer_valued();
    verdict.trivial = chi.is_trivial();
    verdict.irreducible =
        verdict.integer_valued && inner_product(chi, chi) == 1;
    return verdict;
}

} // namespace prymtyurin

#endif
