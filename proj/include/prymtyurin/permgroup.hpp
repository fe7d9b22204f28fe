#ifndef PRYMTYURIN_PERMGROUP_HPP
#define PRYMTYURIN_PERMGROUP_HPP

// Finite permutation groups.
//
// A PermGroup is either Plain (explicitly enumerated, element list sorted by
// image array) or a DirectProduct of plain factors acting on consecutive
// blocks.  Product groups are never enumerated; class data and coset data
// factor through the coordinates instead, and flattened() produces the
// equivalent plain group when its order fits under the enumeration bound.
//
// Canonical orders used throughout the library:
//   * plain element lists are sorted by image array (identity first);
//   * conjugacy classes are ordered by their lexicographically smallest
//     member, which an ascending first-unassigned sweep yields for free;
//   * product-group classes enumerate factor classes row-major (factor 1
//     outermost), which coincides with the plain order of the flattened
//     group because block-concatenated image arrays compare factor 1 first.

#include "numbers.hpp"
#include "permutation.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace prymtyurin {

inline constexpr std::size_t kDefaultEnumerationBound = 200000;

struct GroupSpec {
    enum class Kind { Symmetric, Alternating, Explicit, Product };

    Kind kind = Kind::Symmetric;
    int n = 0;                                  // Symmetric / Alternating
    int degree = 0;                             // Explicit
    std::vector<std::string> generator_words;   // Explicit
    std::vector<GroupSpec> factors;             // Product (non-product factors)

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

class PermGroup;
using PermGroupPtr = std::shared_ptr<const PermGroup>;

namespace detail {

// Breadth-first closure of a generating set.  Throws a resource error when
// the closure exceeds `bound` elements.  The result is sorted by image array.
inline std::vector<Permutation> closure(int degree,
                                        const std::vector<Permutation>& generators,
                                        std::size_t bound,
                                        const std::string& what) {
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    std::vector<Permutation> elements;
    elements.push_back(Permutation::identity(degree));
    index.emplace(elements.front(), 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        for (const Permutation& g : generators) {
            Permutation next = elements[at] * g;
            if (index.contains(next)) continue;
            if (elements.size() >= bound) {
                throw_resource(what + ": closure exceeds the enumeration bound of " +
                               std::to_string(bound) + " elements");
            }
            index.emplace(next, elements.size());
            elements.push_back(std::move(next));
            queue.push_back(elements.size() - 1);
        }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

} // namespace detail

class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
    static PermGroupPtr symmetric(int n,
                                  std::size_t bound = kDefaultEnumerationBound) {
        if (n < 1) throw_input("symmetric group requires n >= 1");
        if (factorial(static_cast<unsigned>(n)) > bound) {
            throw_resource("symmetric group of degree " + std::to_string(n) +
                           " exceeds the enumeration bound of " + std::to_string(bound));
        }
        std::vector<Permutation> gens;
        if (n >= 2) gens.push_back(Permutation::from_cycles("(1 2)", n));
        if (n >= 3) gens.push_back(full_cycle(n));
        return make_plain(n, std::move(gens), bound, "symmetric group");
    }

    static PermGroupPtr alternating(int n,
                                    std::size_t bound = kDefaultEnumerationBound) {
        if (n < 3) throw_input("alternating group requires n >= 3");
        if (factorial(static_cast<unsigned>(n)) / 2 > bound) {
            throw_resource("alternating group of degree " + std::to_string(n) +
                           " exceeds the enumeration bound of " + std::to_string(bound));
        }
        // Consecutive 3-cycles (1 2 3), (2 3 4), ... generate the group.
        std::vector<Permutation> gens;
        for (int k = 1; k + 2 <= n; ++k) {
            gens.push_back(Permutation::from_cycles(
                "(" + std::to_string(k) + " " + std::to_string(k + 1) + " " +
                    std::to_string(k + 2) + ")",
                n));
        }
        return make_plain(n, std::move(gens), bound, "alternating group");
    }

    static PermGroupPtr from_generators(int degree,
                                        std::vector<Permutation> generators,
                                        std::size_t bound = kDefaultEnumerationBound) {
        for (const Permutation& g : generators) {
            if (g.degree() != degree) {
                throw_input("generator degree " + std::to_string(g.degree()) +
                            " does not match the declared degree " +
                            std::to_string(degree));
            }
        }
        return make_plain(degree, std::move(generators), bound, "generated group");
    }

    static PermGroupPtr direct_product(std::vector<PermGroupPtr> factors) {
        if (factors.empty()) throw_input("direct product requires at least one factor");
        for (const auto& f : factors) {
            if (!f) throw_input("direct product factor is null");
            if (f->is_direct_product()) {
                throw_input("direct product factors must not themselves be products");
            }
        }
        return PermGroupPtr(new PermGroup(std::move(factors)));
    }

    int degree() const { return degree_; }
    const Integer& order() const { return order_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::size_t enumeration_bound() const { return bound_; }

    bool is_direct_product() const { return !factors_.empty(); }
    const std::vector<PermGroupPtr>& factors() const { return factors_; }
    const std::vector<int>& factor_offsets() const { return offsets_; }
    const std::vector<int>& factor_degrees() const { return lengths_; }

    // ----- plain element access ---------------------------------------

    const std::vector<Permutation>& elements() const {
        require_plain("element enumeration");
        return elements_;
    }

    std::optional<std::size_t> element_index(const Permutation& p) const {
        require_plain("element lookup");
        auto it = element_index_.find(p);
        if (it == element_index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != degree_) return false;
        if (!is_direct_product()) return element_index_.contains(p);
        if (!preserves_blocks(p, offsets_, lengths_)) return false;
        for (std::size_t b = 0; b < factors_.size(); ++b) {
            if (!factors_[b]->contains(
                    restrict_to_block(p, offsets_[b], lengths_[b]))) {
                return false;
            }
        }
        return true;
    }

    // ----- conjugacy classes ------------------------------------------

    std::size_t class_count() const {
        if (!is_direct_product()) return class_reps_.size();
        std::size_t count = 1;
        for (const auto& f : factors_) count *= f->class_count();
        return count;
    }

    Permutation class_representative(std::size_t index) const {
        if (!is_direct_product()) return elements_[class_reps_[index]];
        std::vector<Permutation> parts;
        parts.reserve(factors_.size());
        for (std::size_t b = 0; b < factors_.size(); ++b) {
            parts.push_back(factors_[b]->class_representative(
                (index / class_strides_[b]) % factors_[b]->class_count()));
        }
        return concat_blocks(parts);
    }

    Integer class_size(std::size_t index) const {
        if (!is_direct_product()) return Integer(class_sizes_[index]);
        Integer size = 1;
        for (std::size_t b = 0; b < factors_.size(); ++b) {
            size *= factors_[b]->class_size(
                (index / class_strides_[b]) % factors_[b]->class_count());
        }
        return size;
    }

    std::size_t class_index_of(const Permutation& p) const {
        if (!is_direct_product()) {
            auto idx = element_index(p);
            if (!idx) throw_input("element " + p.cycle_string() + " is not in the group");
            return element_class_[*idx];
        }
        if (!contains(p)) {
            throw_input("element " + p.cycle_string() + " is not in the group");
        }
        std::size_t index = 0;
        for (std::size_t b = 0; b < factors_.size(); ++b) {
            index += class_strides_[b] *
                     factors_[b]->class_index_of(
                         restrict_to_block(p, offsets_[b], lengths_[b]));
        }
        return index;
    }

    // Per-element class ids, aligned with elements() (plain groups only).
    const std::vector<std::uint32_t>& element_class_ids() const {
        require_plain("per-element class table");
        return element_class_;
    }

    // ----- flattening ---------------------------------------------------

    // The same element set as an explicitly enumerated plain group.  Used as
    // the fallback when an operation needs whole-group enumeration on a
    // product (e.g. non-product subgroups).  Fails when the order exceeds
    // the enumeration bound.  Memoized; a failed attempt is retriable.
    PermGroupPtr flattened() const {
        if (!is_direct_product()) return shared_from_this();
        std::call_once(flatten_once_, [this] {
            if (order_ > bound_) {
                throw_resource("product group of order " + order_.str() +
                               " exceeds the enumeration bound of " +
                               std::to_string(bound_) +
                               " and cannot be enumerated");
            }
            flatten_cache_ = from_generators(degree_, generators_, bound_);
        });
        return flatten_cache_;
    }

private:
    PermGroup(int degree, std::vector<Permutation> generators, std::size_t bound,
              std::vector<Permutation> elements)
        : degree_(degree),
          bound_(bound),
          generators_(std::move(generators)),
          elements_(std::move(elements)) {
        order_ = Integer(elements_.size());
        element_index_.reserve(elements_.size() * 2);
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            element_index_.emplace(elements_[i], i);
        }
        compute_classes();
    }

    explicit PermGroup(std::vector<PermGroupPtr> factors)
        : factors_(std::move(factors)) {
        degree_ = 0;
        order_ = 1;
        bound_ = kDefaultEnumerationBound;
        for (const auto& f : factors_) {
            offsets_.push_back(degree_);
            lengths_.push_back(f->degree());
            degree_ += f->degree();
            order_ *= f->order();
            bound_ = std::max(bound_, f->enumeration_bound());
        }
        for (std::size_t b = 0; b < factors_.size(); ++b) {
            for (const Permutation& g : factors_[b]->generators()) {
                generators_.push_back(embed_at(g, offsets_[b], degree_));
            }
        }
        class_strides_.assign(factors_.size(), 1);
        for (std::size_t b = factors_.size(); b-- > 1;) {
            class_strides_[b - 1] =
                class_strides_[b] * factors_[b]->class_count();
        }
    }

    static PermGroupPtr make_plain(int degree, std::vector<Permutation> gens,
                                   std::size_t bound, const std::string& what) {
        std::vector<Permutation> elements = detail::closure(degree, gens, bound, what);
        return PermGroupPtr(
            new PermGroup(degree, std::move(gens), bound, std::move(elements)));
    }

    static Permutation full_cycle(int n) {
        std::string word = "(";
        for (int k = 1; k <= n; ++k) {
            if (k > 1) word += ' ';
            word += std::to_string(k);
        }
        word += ')';
        return Permutation::from_cycles(word, n);
    }

    void require_plain(const std::string& what) const {
        if (is_direct_product()) {
            throw_input(what + " is not available on a direct product; use "
                               "flattened() or the per-factor structure");
        }
    }

    // Orbit sweep under conjugation by generators.  Visiting elements in
    // ascending order makes class ids come out sorted by smallest member.
    void compute_classes() {
        const std::size_t n = elements_.size();
        constexpr std::uint32_t unassigned = 0xffffffffu;
        element_class_.assign(n, unassigned);
        for (std::size_t start = 0; start < n; ++start) {
            if (element_class_[start] != unassigned) continue;
            const auto cid = static_cast<std::uint32_t>(class_reps_.size());
            class_reps_.push_back(start);
            class_sizes_.push_back(0);
            element_class_[start] = cid;
            std::deque<std::size_t> queue{start};
            while (!queue.empty()) {
                const std::size_t at = queue.front();
                queue.pop_front();
                ++class_sizes_.back();
                for (const Permutation& g : generators_) {
                    const Permutation conj = elements_[at].conjugated_by(g);
                    const std::size_t idx = element_index_.at(conj);
                    if (element_class_[idx] == unassigned) {
                        element_class_[idx] = cid;
                        queue.push_back(idx);
                    }
                }
            }
        }
    }

    int degree_ = 0;
    Integer order_;
    std::size_t bound_ = kDefaultEnumerationBound;
    std::vector<Permutation> generators_;

    // Plain data.
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> element_index_;
    std::vector<std::size_t> class_reps_;     // indices into elements_
    std::vector<std::uint64_t> class_sizes_;
    std::vector<std::uint32_t> element_class_;

    // Product data.
    std::vector<PermGroupPtr> factors_;
    std::vector<int> offsets_;
    std::vector<int> lengths_;
    std::vector<std::size_t> class_strides_;

    // Lazily computed plain copy of a product group.
    mutable std::once_flag flatten_once_;
    mutable PermGroupPtr flatten_cache_;
};

struct ConjugacyClassInfo {
    Permutation representative;
    Integer size;
};

inline std::vector<ConjugacyClassInfo> conjugacy_classes(const PermGroup& group) {
    std::vector<ConjugacyClassInfo> classes;
    classes.reserve(group.class_count());
    for (std::size_t i = 0; i < group.class_count(); ++i) {
        classes.push_back({group.class_representative(i), group.class_size(i)});
    }
    return classes;
}

inline PermGroupPtr generate_group(const GroupSpec& spec,
                                   std::size_t bound = kDefaultEnumerationBound) {
    switch (spec.kind) {
        case GroupSpec::Kind::Symmetric:
            return PermGroup::symmetric(spec.n, bound);
        case GroupSpec::Kind::Alternating:
            return PermGroup::alternating(spec.n, bound);
        case GroupSpec::Kind::Explicit: {
            std::vector<Permutation> gens;
            gens.reserve(spec.generator_words.size());
            for (const std::string& word : spec.generator_words) {
                gens.push_back(Permutation::from_cycles(word, spec.degree));
            }
            return PermGroup::from_generators(spec.degree, std::move(gens), bound);
        }
        case GroupSpec::Kind::Product: {
            std::vector<PermGroupPtr> factors;
            factors.reserve(spec.factors.size());
            for (const GroupSpec& f : spec.factors) {
                if (f.kind == GroupSpec::Kind::Product) {
                    throw_input("nested product groups are not supported");
                }
                factors.push_back(generate_group(f, bound));
            }
            return PermGroup::direct_product(std::move(factors));
        }
    }
    throw_input("unknown group kind");
}

} // namespace prymtyurin

#endif
