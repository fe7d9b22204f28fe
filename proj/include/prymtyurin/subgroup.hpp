#ifndef PRYMTYURIN_SUBGROUP_HPP
#define PRYMTYURIN_SUBGROUP_HPP

// Subgroups of a PermGroup.
//
// A Subgroup is an immutable handle tied to its ambient group.  It carries
// one or both of:
//   * an explicit, sorted element list (always present when the ambient
//     group is plain, and for small closures inside product groups such as
//     cyclic subgroups, including ones not aligned with the blocks);
//   * a per-factor decomposition (when the ambient group is a direct
//     product and every generator is supported on a single block, the
//     subgroup is exactly the product of its per-block closures, because
//     generators in distinct blocks commute and intersect trivially).
//
// Product-form subgroups of large product groups never materialize their
// element list; the engine's coset/character paths factor per coordinate.

#include "numbers.hpp"
#include "permgroup.hpp"
#include "permutation.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace prymtyurin {

struct SubgroupSpec {
    enum class Kind { PointStabilizer, Explicit, Product };

    Kind kind = Kind::PointStabilizer;
    int point = 0;                              // PointStabilizer (1-based)
    std::vector<std::string> generator_words;   // Explicit
    std::vector<SubgroupSpec> factors;          // Product

    friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

class Subgroup {
public:
    static Subgroup generated(PermGroupPtr ambient,
                              std::vector<Permutation> generators) {
        require_ambient(ambient);
        for (const Permutation& g : generators) {
            if (!ambient->contains(g)) {
                throw_input("subgroup generator " + g.cycle_string() +
                            " is not an element of the ambient group");
            }
        }
        if (ambient->is_direct_product()) {
            if (auto factored = try_factor(ambient, generators)) {
                Subgroup s = product_of(ambient, std::move(*factored));
                s.generators_ = std::move(generators);
                if (s.generators_.empty()) {
                    s.generators_.push_back(Permutation::identity(ambient->degree()));
                }
                return s;
            }
            // Not block-aligned: close explicitly (bounded), e.g. diagonal
            // cyclic subgroups.  The ambient product itself stays
            // unenumerated; only this subgroup's own elements are listed.
            std::vector<Permutation> elems = detail::closure(
                ambient->degree(), generators, ambient->enumeration_bound(),
                "subgroup closure");
            return Subgroup(std::move(ambient), std::move(generators),
                            std::move(elems));
        }
        std::vector<Permutation> elems = detail::closure(
            ambient->degree(), generators, ambient->enumeration_bound(),
            "subgroup closure");
        return Subgroup(std::move(ambient), std::move(generators), std::move(elems));
    }

    static Subgroup cyclic(PermGroupPtr ambient, const Permutation& g) {
        return generated(std::move(ambient), {g});
    }

    static Subgroup whole_group(PermGroupPtr ambient) {
        require_ambient(ambient);
        if (ambient->is_direct_product()) {
            std::vector<Subgroup> parts;
            parts.reserve(ambient->factors().size());
            for (const auto& f : ambient->factors()) parts.push_back(whole_group(f));
            return product_of(ambient, std::move(parts));
        }
        PermGroupPtr keep = ambient;
        return Subgroup(std::move(ambient), keep->generators(), keep->elements());
    }

    static Subgroup point_stabilizer(PermGroupPtr ambient, int point_1based) {
        require_ambient(ambient);
        if (point_1based < 1 || point_1based > ambient->degree()) {
            throw_input("stabilized point " + std::to_string(point_1based) +
                        " is outside 1.." + std::to_string(ambient->degree()));
        }
        const int point = point_1based - 1;
        if (ambient->is_direct_product()) {
            std::vector<Subgroup> parts;
            for (std::size_t b = 0; b < ambient->factors().size(); ++b) {
                const int off = ambient->factor_offsets()[b];
                const int len = ambient->factor_degrees()[b];
                if (point >= off && point < off + len) {
                    parts.push_back(point_stabilizer(ambient->factors()[b],
                                                     point - off + 1));
                } else {
                    parts.push_back(whole_group(ambient->factors()[b]));
                }
            }
            return product_of(ambient, std::move(parts));
        }
        std::vector<Permutation> elems;
        for (const Permutation& e : ambient->elements()) {
            if (e.image(point) == point) elems.push_back(e);
        }
        std::vector<Permutation> gens =
            reduce_generators(ambient->degree(), elems, ambient->enumeration_bound());
        return Subgroup(std::move(ambient), std::move(gens), std::move(elems));
    }

    // Builds the coordinate-wise product H_1 x ... x H_m inside a direct
    // product; factor i must be a subgroup of the i-th ambient factor.
    static Subgroup product_of(PermGroupPtr ambient, std::vector<Subgroup> factors) {
        require_ambient(ambient);
        if (!ambient->is_direct_product()) {
            throw_input("product subgroup requires a direct-product ambient group");
        }
        if (factors.size() != ambient->factors().size()) {
            throw_input("product subgroup has " + std::to_string(factors.size()) +
                        " factors but the ambient group has " +
                        std::to_string(ambient->factors().size()));
        }
        for (std::size_t b = 0; b < factors.size(); ++b) {
            if (factors[b].ambient().get() != ambient->factors()[b].get()) {
                throw_input("product subgroup factor " + std::to_string(b + 1) +
                            " is not a subgroup of the matching ambient factor");
            }
        }
        Subgroup s;
        s.ambient_ = std::move(ambient);
        Integer order = 1;
        for (std::size_t b = 0; b < factors.size(); ++b) {
            const int off = s.ambient_->factor_offsets()[b];
            for (const Permutation& g : factors[b].generators()) {
                if (!g.is_identity()) {
                    s.generators_.push_back(embed_at(g, off, s.ambient_->degree()));
                }
            }
            order *= factors[b].order();
        }
        if (s.generators_.empty()) {
            s.generators_.push_back(Permutation::identity(s.ambient_->degree()));
        }
        s.order_ = order;
        s.factors_ = std::make_shared<std::vector<Subgroup>>(std::move(factors));
        return s;
    }

    static Subgroup build(PermGroupPtr ambient, const SubgroupSpec& spec) {
        switch (spec.kind) {
            case SubgroupSpec::Kind::PointStabilizer:
                if (ambient->is_direct_product()) {
                    throw_input("point_stabilizer subgroups of a product group must "
                                "be given per factor ([subgroup.factor] sections)");
                }
                return point_stabilizer(std::move(ambient), spec.point);
            case SubgroupSpec::Kind::Explicit: {
                std::vector<Permutation> gens;
                gens.reserve(spec.generator_words.size());
                for (const std::string& word : spec.generator_words) {
                    gens.push_back(Permutation::from_cycles(word, ambient->degree()));
                }
                return generated(std::move(ambient), std::move(gens));
            }
            case SubgroupSpec::Kind::Product: {
                if (!ambient->is_direct_product()) {
                    throw_input("subgroup kind 'product' requires a product group");
                }
                if (spec.factors.size() != ambient->factors().size()) {
                    throw_input("subgroup has " + std::to_string(spec.factors.size()) +
                                " factor sections but the group has " +
                                std::to_string(ambient->factors().size()) + " factors");
                }
                std::vector<Subgroup> parts;
                for (std::size_t b = 0; b < spec.factors.size(); ++b) {
                    if (spec.factors[b].kind == SubgroupSpec::Kind::Product) {
                        throw_input("nested product subgroups are not supported");
                    }
                    parts.push_back(build(ambient->factors()[b], spec.factors[b]));
                }
                return product_of(std::move(ambient), std::move(parts));
            }
        }
        throw_input("unknown subgroup kind");
    }

    const PermGroupPtr& ambient() const { return ambient_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const Integer& order() const { return order_; }

    bool is_product() const { return factors_ != nullptr; }
    const std::vector<Subgroup>& factors() const {
        if (!factors_) throw_input("subgroup has no per-factor decomposition");
        return *factors_;
    }

    bool has_element_list() const { return !elements_.empty(); }
    const std::vector<Permutation>& elements() const {
        if (elements_.empty()) {
            throw_input("subgroup elements are not materialized; use the "
                        "per-factor decomposition");
        }
        return elements_;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != ambient_->degree()) return false;
        if (has_element_list()) {
            return std::binary_search(elements_.begin(), elements_.end(), p);
        }
        const auto& offs = ambient_->factor_offsets();
        const auto& lens = ambient_->factor_degrees();
        if (!preserves_blocks(p, offs, lens)) return false;
        for (std::size_t b = 0; b < factors().size(); ++b) {
            if (!factors()[b].contains(restrict_to_block(p, offs[b], lens[b]))) {
                return false;
            }
        }
        return true;
    }

private:
    Subgroup() = default;

    Subgroup(PermGroupPtr ambient, std::vector<Permutation> generators,
             std::vector<Permutation> elements)
        : ambient_(std::move(ambient)),
          generators_(std::move(generators)),
          elements_(std::move(elements)) {
        if (generators_.empty()) {
            generators_.push_back(Permutation::identity(ambient_->degree()));
        }
        order_ = Integer(elements_.size());
    }

    static void require_ambient(const PermGroupPtr& ambient) {
        if (!ambient) throw_input("subgroup requires an ambient group");
    }

    // When every generator moves points of a single block only, the closure
    // splits as the product of per-block closures.
    static std::optional<std::vector<Subgroup>> try_factor(
        const PermGroupPtr& ambient, const std::vector<Permutation>& generators) {
        const auto& offs = ambient->factor_offsets();
        const auto& lens = ambient->factor_degrees();
        std::vector<std::vector<Permutation>> per_block(ambient->factors().size());
        for (const Permutation& g : generators) {
            if (g.is_identity()) continue;
            const std::vector<int> blocks = moved_blocks(g, offs, lens);
            if (blocks.size() != 1) return std::nullopt;
            const int b = blocks.front();
            per_block[static_cast<std::size_t>(b)].push_back(
                restrict_to_block(g, offs[static_cast<std::size_t>(b)],
                                  lens[static_cast<std::size_t>(b)]));
        }
        std::vector<Subgroup> parts;
        parts.reserve(per_block.size());
        for (std::size_t b = 0; b < per_block.size(); ++b) {
            parts.push_back(generated(ambient->factors()[b], std::move(per_block[b])));
        }
        return parts;
    }

    // Greedy generating-set reduction for subgroups collected as element
    // lists (point stabilizers of explicit groups): add an element only when
    // it enlarges the closure built so far.
    static std::vector<Permutation> reduce_generators(
        int degree, const std::vector<Permutation>& elements, std::size_t bound) {
        std::vector<Permutation> gens;
        std::vector<Permutation> closed{Permutation::identity(degree)};
        for (const Permutation& e : elements) {
            if (std::binary_search(closed.begin(), closed.end(), e)) continue;
            gens.push_back(e);
            closed = detail::closure(degree, gens, bound, "generator reduction");
            if (closed.size() == elements.size()) break;
        }
        return gens;
    }

    PermGroupPtr ambient_;
    std::vector<Permutation> generators_;
    Integer order_ = 1;
    std::vector<Permutation> elements_;                   // sorted when present
    std::shared_ptr<std::vector<Subgroup>> factors_;      // product form
};

// True when the cyclic subgroups generated by a and b are conjugate inside
// the ambient group.  Uses block support to decide product cases without
// enumeration; falls back to a flattened sweep when the product is small
// enough, and reports a resource error otherwise.
inline bool cyclic_subgroups_conjugate(const PermGroupPtr& group,
                                       const Permutation& a,
                                       const Permutation& b) {
    if (a.element_order() != b.element_order()) return false;
    if (!group->is_direct_product()) {
        // Powers of b, sorted, for membership tests.
        std::vector<Permutation> powers;
        Permutation p = Permutation::identity(group->degree());
        do {
            powers.push_back(p);
            p = p * b;
        } while (!p.is_identity());
        std::sort(powers.begin(), powers.end());
        for (const Permutation& g : group->elements()) {
            if (std::binary_search(powers.begin(), powers.end(),
                                   a.conjugated_by(g))) {
                return true;
            }
        }
        return false;
    }
    const auto& offs = group->factor_offsets();
    const auto& lens = group->factor_degrees();
    const std::vector<int> blocks_a = moved_blocks(a, offs, lens);
    const std::vector<int> blocks_b = moved_blocks(b, offs, lens);
    if (blocks_a != blocks_b) return false;  // conjugation preserves blocks
    if (blocks_a.size() == 1) {
        const int blk = blocks_a.front();
        return cyclic_subgroups_conjugate(
            group->factors()[static_cast<std::size_t>(blk)],
            restrict_to_block(a, offs[static_cast<std::size_t>(blk)],
                              lens[static_cast<std::size_t>(blk)]),
            restrict_to_block(b, offs[static_cast<std::size_t>(blk)],
                              lens[static_cast<std::size_t>(blk)]));
    }
    return cyclic_subgroups_conjugate(group->flattened(), a, b);
}

} // namespace prymtyurin

#endif
