#ifndef PRYMTYURIN_COSETS_HPP
#define PRYMTYURIN_COSETS_HPP

// Coset and double-coset decompositions.
//
// Plain path: the ambient element list is sorted, so assigning cosets by an
// ascending first-unassigned sweep yields cosets (and double cosets) ordered
// by their lexicographically smallest member, identity coset first.
//
// Double cosets H g H carry a simultaneous transversal: n_i elements that
// represent the n_i left cosets inside the double coset and its n_i right
// cosets at the same time.  Within one double coset every left coset meets
// every right coset (y in HxH implies xH and Hy intersect), so a perfect
// matching between the two sides always exists; the matcher nevertheless
// builds the actual intersection graph and runs augmenting paths, seeded so
// that the smallest element of the double coset becomes the first
// representative (the identity, for the identity double coset).
//
// Product path: double cosets of H_1 x ... x H_m in G_1 x ... x G_m are the
// products of per-factor double cosets; representatives, sizes, and the
// two-sided transversal all combine coordinate-wise (row-major, factor 1
// outermost), matching the flattened plain order.

#include "numbers.hpp"
#include "permgroup.hpp"
#include "permutation.hpp"
#include "subgroup.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <utility>
#include <vector>

namespace prymtyurin {

struct CosetTable {
    std::vector<std::uint32_t> coset_of;  // aligned with group.elements()
    std::vector<std::size_t> rep_index;   // lex-min member per coset, ascending
};

namespace detail {

constexpr std::uint32_t kUnassigned = 0xffffffffu;

enum class CosetSide { Left, Right };

inline CosetTable coset_table(const PermGroup& group, const Subgroup& subgroup,
                              CosetSide side) {
    const auto& elements = group.elements();
    CosetTable table;
    table.coset_of.assign(elements.size(), kUnassigned);
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        if (table.coset_of[idx] != kUnassigned) continue;
        const auto cid = static_cast<std::uint32_t>(table.rep_index.size());
        table.rep_index.push_back(idx);
        for (const Permutation& h : subgroup.elements()) {
            const Permutation member = side == CosetSide::Left
                                           ? elements[idx] * h   // gH
                                           : h * elements[idx];  // Hg
            table.coset_of[*group.element_index(member)] = cid;
        }
    }
    return table;
}

} // namespace detail

inline CosetTable left_cosets(const PermGroup& group, const Subgroup& subgroup) {
    return detail::coset_table(group, subgroup, detail::CosetSide::Left);
}

inline CosetTable right_cosets(const PermGroup& group, const Subgroup& subgroup) {
    return detail::coset_table(group, subgroup, detail::CosetSide::Right);
}

struct DoubleCosetBlock {
    Permutation representative;            // lexicographically smallest element
    Integer coset_count;                   // n_i = number of left cosets inside
    Integer element_count;                 // n_i * |H|
    std::vector<Permutation> two_sided_reps;  // [0] == representative
};

struct DoubleCosetDecomposition {
    std::vector<DoubleCosetBlock> blocks;
    Integer subgroup_order;
    Integer index;  // [G : H]
};

namespace detail {

// Augmenting-path matching (left cosets to right cosets of one double
// coset).  `adjacency[l]` lists candidate rights in ascending order.
inline bool augment(std::size_t l,
                    const std::vector<std::vector<std::size_t>>& adjacency,
                    std::vector<std::size_t>& match_of_right,
                    std::vector<char>& visited) {
    for (std::size_t r : adjacency[l]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (match_of_right[r] == static_cast<std::size_t>(-1) ||
            augment(match_of_right[r], adjacency, match_of_right, visited)) {
            match_of_right[r] = l;
            return true;
        }
    }
    return false;
}

inline DoubleCosetDecomposition simultaneous_double_cosets_plain(
    const PermGroup& group, const Subgroup& subgroup) {
    const auto& elements = group.elements();
    const CosetTable left = left_cosets(group, subgroup);
    const CosetTable right = right_cosets(group, subgroup);
    const std::size_t coset_count = left.rep_index.size();

    // Group left cosets into double cosets: H (gH) = (hg)H reaches every
    // left coset inside H g H.
    std::vector<std::uint32_t> block_of_left(coset_count, kUnassigned);
    std::vector<std::vector<std::uint32_t>> block_lefts;
    for (std::uint32_t l = 0; l < coset_count; ++l) {
        if (block_of_left[l] != kUnassigned) continue;
        const auto bid = static_cast<std::uint32_t>(block_lefts.size());
        block_lefts.push_back({});
        block_of_left[l] = bid;
        std::deque<std::uint32_t> queue{l};
        while (!queue.empty()) {
            const std::uint32_t at = queue.front();
            queue.pop_front();
            block_lefts[bid].push_back(at);
            const Permutation& rep = elements[left.rep_index[at]];
            for (const Permutation& h : subgroup.generators()) {
                const std::uint32_t next =
                    left.coset_of[*group.element_index(h * rep)];
                if (block_of_left[next] == kUnassigned) {
                    block_of_left[next] = bid;
                    queue.push_back(next);
                }
            }
        }
        std::sort(block_lefts[bid].begin(), block_lefts[bid].end());
    }

    // Independent count check: double cosets biject with orbits of H acting
    // on its right cosets by right multiplication.
    {
        std::vector<char> seen(coset_count, 0);
        std::size_t orbits = 0;
        for (std::uint32_t r = 0; r < coset_count; ++r) {
            if (seen[r]) continue;
            ++orbits;
            std::deque<std::uint32_t> queue{r};
            seen[r] = 1;
            while (!queue.empty()) {
                const std::uint32_t at = queue.front();
                queue.pop_front();
                const Permutation& rep = elements[right.rep_index[at]];
                for (const Permutation& h : subgroup.generators()) {
                    const std::uint32_t next =
                        right.coset_of[*group.element_index(rep * h)];
                    if (!seen[next]) {
                        seen[next] = 1;
                        queue.push_back(next);
                    }
                }
            }
        }
        if (orbits != block_lefts.size()) {
            throw_engine("double-coset count mismatch between the left-coset "
                         "sweep and the right-coset orbit count");
        }
    }

    // Intersection edges (left coset, right coset) -> smallest element.
    std::vector<std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t>>
        edges(block_lefts.size());
    std::vector<std::size_t> block_min(block_lefts.size(),
                                       static_cast<std::size_t>(-1));
    for (std::size_t j = 0; j < elements.size(); ++j) {
        const std::uint32_t l = left.coset_of[j];
        const std::uint32_t r = right.coset_of[j];
        const std::uint32_t bid = block_of_left[l];
        edges[bid].try_emplace({l, r}, j);  // first j is the smallest
        if (block_min[bid] == static_cast<std::size_t>(-1)) block_min[bid] = j;
        // elements are sorted, so the first element seen in a block is its min
    }

    DoubleCosetDecomposition result;
    result.subgroup_order = subgroup.order();
    result.index = Integer(coset_count);
    for (std::size_t bid = 0; bid < block_lefts.size(); ++bid) {
        const auto& lefts = block_lefts[bid];
        const std::size_t n = lefts.size();

        // Local ids and adjacency.
        std::map<std::uint32_t, std::size_t> left_local, right_local;
        std::vector<std::uint32_t> rights;
        for (const auto& [key, mini] : edges[bid]) {
            if (!right_local.contains(key.second)) {
                right_local.emplace(key.second, 0);
            }
        }
        for (auto& [rid, local] : right_local) {
            local = rights.size();
            rights.push_back(rid);
        }
        for (std::size_t i = 0; i < lefts.size(); ++i) left_local[lefts[i]] = i;
        if (rights.size() != n) {
            throw_engine("double coset has mismatched left and right coset counts");
        }
        std::vector<std::vector<std::size_t>> adjacency(n);
        for (const auto& [key, mini] : edges[bid]) {
            adjacency[left_local[key.first]].push_back(right_local[key.second]);
        }

        // Force the edge containing the smallest element of the double coset
        // into the matching, then complete it with augmenting paths.
        const std::size_t min_elem = block_min[bid];
        const std::size_t forced_l = left_local[left.coset_of[min_elem]];
        const std::size_t forced_r = right_local[right.coset_of[min_elem]];
        std::vector<std::size_t> match_of_right(n, static_cast<std::size_t>(-1));
        match_of_right[forced_r] = forced_l;
        for (std::size_t l = 0; l < n; ++l) {
            if (l == forced_l) continue;
            std::vector<char> visited(n, 0);
            visited[forced_r] = 1;  // keep the forced edge fixed
            if (!augment(l, adjacency, match_of_right, visited)) {
                throw_engine("no simultaneous two-sided transversal exists for a "
                             "double coset (perfect matching failed)");
            }
        }
        std::vector<std::size_t> match_of_left(n, static_cast<std::size_t>(-1));
        for (std::size_t r = 0; r < n; ++r) {
            if (match_of_right[r] != static_cast<std::size_t>(-1)) {
                match_of_left[match_of_right[r]] = r;
            }
        }

        DoubleCosetBlock block;
        block.representative = elements[min_elem];
        block.coset_count = Integer(n);
        block.element_count = Integer(n) * subgroup.order();
        block.two_sided_reps.push_back(elements[min_elem]);
        for (std::size_t l = 0; l < n; ++l) {
            if (l == forced_l) continue;
            const auto it = edges[bid].find(
                {lefts[l], rights[match_of_left[l]]});
            block.two_sided_reps.push_back(elements[it->second]);
        }
        result.blocks.push_back(std::move(block));
    }
    return result;
}

inline DoubleCosetDecomposition simultaneous_double_cosets_product(
    const PermGroupPtr& group, const Subgroup& subgroup) {
    const std::size_t m = group->factors().size();
    std::vector<DoubleCosetDecomposition> parts;
    parts.reserve(m);
    for (std::size_t b = 0; b < m; ++b) {
        parts.push_back(simultaneous_double_cosets_plain(
            *group->factors()[b], subgroup.factors()[b]));
    }
    DoubleCosetDecomposition result;
    result.subgroup_order = subgroup.order();
    result.index = 1;
    for (const auto& part : parts) result.index *= part.index;

    // Row-major multi-index increment; returns false after wrapping around.
    const auto advance = [m](std::vector<std::size_t>& idx, auto limit) {
        std::size_t b = m;
        while (b-- > 0) {
            if (++idx[b] < limit(b)) return true;
            idx[b] = 0;
        }
        return false;
    };

    std::vector<std::size_t> at(m, 0);
    do {
        DoubleCosetBlock block;
        block.coset_count = 1;
        block.element_count = 1;
        std::vector<Permutation> rep_parts;
        rep_parts.reserve(m);
        for (std::size_t b = 0; b < m; ++b) {
            const auto& fb = parts[b].blocks[at[b]];
            block.coset_count *= fb.coset_count;
            block.element_count *= fb.element_count;
            rep_parts.push_back(fb.representative);
        }
        block.representative = concat_blocks(rep_parts);
        // Cartesian product of factor transversals, factor 1 outermost; the
        // first entry concatenates the factor representatives.
        std::vector<std::size_t> t(m, 0);
        do {
            std::vector<Permutation> tuple;
            tuple.reserve(m);
            for (std::size_t b = 0; b < m; ++b) {
                tuple.push_back(parts[b].blocks[at[b]].two_sided_reps[t[b]]);
            }
            block.two_sided_reps.push_back(concat_blocks(tuple));
        } while (advance(t, [&](std::size_t b) {
            return parts[b].blocks[at[b]].two_sided_reps.size();
        }));
        result.blocks.push_back(std::move(block));
    } while (advance(at, [&](std::size_t b) { return parts[b].blocks.size(); }));
    return result;
}

} // namespace detail

// Rebuilds a subgroup over the flattened copy of a product group so plain
// algorithms can run on it.
inline Subgroup rebuild_on(const PermGroupPtr& flat, const Subgroup& subgroup) {
    return Subgroup::generated(flat, subgroup.generators());
}

inline DoubleCosetDecomposition simultaneous_double_cosets(
    const PermGroupPtr& group, const Subgroup& subgroup) {
    if (!group->is_direct_product()) {
        return detail::simultaneous_double_cosets_plain(*group, subgroup);
    }
    if (subgroup.is_product()) {
        return detail::simultaneous_double_cosets_product(group, subgroup);
    }
    const PermGroupPtr flat = group->flattened();
    return detail::simultaneous_double_cosets_plain(*flat,
                                                    rebuild_on(flat, subgroup));
}

// ----- general (H, K) double cosets ------------------------------------

struct GeneralDoubleCosets {
    std::vector<Permutation> representatives;  // lex-min per double coset
    std::vector<Integer> element_counts;
};

namespace detail {

inline Integer double_coset_count_plain(const PermGroup& group,
                                        const Subgroup& h, const Subgroup& k) {
    // Orbits of K acting on the right cosets of H by right multiplication.
    const CosetTable right = right_cosets(group, h);
    const std::size_t cosets = right.rep_index.size();
    std::vector<char> seen(cosets, 0);
    Integer orbits = 0;
    for (std::uint32_t r = 0; r < cosets; ++r) {
        if (seen[r]) continue;
        ++orbits;
        std::deque<std::uint32_t> queue{r};
        seen[r] = 1;
        while (!queue.empty()) {
            const std::uint32_t at = queue.front();
            queue.pop_front();
            const Permutation& rep = group.elements()[right.rep_index[at]];
            for (const Permutation& g : k.generators()) {
                const std::uint32_t next =
                    right.coset_of[*group.element_index(rep * g)];
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            }
        }
    }
    return orbits;
}

inline GeneralDoubleCosets double_cosets_plain(const PermGroup& group,
                                               const Subgroup& h,
                                               const Subgroup& k) {
    const auto& elements = group.elements();
    std::vector<char> seen(elements.size(), 0);
    GeneralDoubleCosets result;
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        if (seen[idx]) continue;
        result.representatives.push_back(elements[idx]);
        Integer size = 0;
        std::deque<std::size_t> queue{idx};
        seen[idx] = 1;
        while (!queue.empty()) {
            const std::size_t at = queue.front();
            queue.pop_front();
            ++size;
            for (const Permutation& g : h.generators()) {
                const std::size_t next = *group.element_index(g * elements[at]);
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            }
            for (const Permutation& g : k.generators()) {
                const std::size_t next = *group.element_index(elements[at] * g);
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            }
        }
        result.element_counts.push_back(size);
    }
    // Dual route: orbit counting must agree with the element sweep.
    if (double_coset_count_plain(group, h, k) !=
        Integer(result.representatives.size())) {
        throw_engine("double-coset count mismatch between the element sweep "
                     "and the orbit count");
    }
    return result;
}

} // namespace detail

inline GeneralDoubleCosets double_cosets(const PermGroupPtr& group,
                                         const Subgroup& h, const Subgroup& k) {
    if (!group->is_direct_product()) {
        return detail::double_cosets_plain(*group, h, k);
    }
    if (h.is_product() && k.is_product()) {
        const std::size_t m = group->factors().size();
        std::vector<GeneralDoubleCosets> parts;
        parts.reserve(m);
        for (std::size_t b = 0; b < m; ++b) {
            parts.push_back(detail::double_cosets_plain(
                *group->factors()[b], h.factors()[b], k.factors()[b]));
        }
        GeneralDoubleCosets result;
        std::vector<std::size_t> at(m, 0);
        bool more = true;
        while (more) {
            std::vector<Permutation> rep_parts;
            Integer size = 1;
            for (std::size_t b = 0; b < m; ++b) {
                rep_parts.push_back(parts[b].representatives[at[b]]);
                size *= parts[b].element_counts[at[b]];
            }
            result.representatives.push_back(concat_blocks(rep_parts));
            result.element_counts.push_back(size);
            more = false;
            std::size_t b = m;
            while (b-- > 0) {
                if (++at[b] < parts[b].representatives.size()) {
                    more = true;
                    break;
                }
                at[b] = 0;
            }
        }
        return result;
    }
    const PermGroupPtr flat = group->flattened();
    return detail::double_cosets_plain(*flat, rebuild_on(flat, h),
                                       rebuild_on(flat, k));
}

// Number of (H, K) double cosets.  Product-structured inputs multiply the
// per-factor counts; otherwise the count runs on the (possibly flattened)
// plain group.
inline Integer double_coset_count(const PermGroupPtr& group, const Subgroup& h,
                                  const Subgroup& k) {
    if (!group->is_direct_product()) {
        return detail::double_coset_count_plain(*group, h, k);
    }
    if (h.is_product() && k.is_product()) {
        Integer count = 1;
        for (std::size_t b = 0; b < group->factors().size(); ++b) {
            count *= detail::double_coset_count_plain(
                *group->factors()[b], h.factors()[b], k.factors()[b]);
        }
        return count;
    }
    const PermGroupPtr flat = group->flattened();
    return detail::double_coset_count_plain(*flat, rebuild_on(flat, h),
                                            rebuild_on(flat, k));
}

} // namespace prymtyurin

#endif
