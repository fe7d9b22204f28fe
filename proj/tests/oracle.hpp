#pragma once

// Brute-force reference implementations used by the tests.  Everything here
// works on raw 0-based image arrays and exhaustive loops, deliberately
// avoiding the library's own group machinery, so the two sides of each
// assertion are computed independently.

#include <prymtyurin/numbers.hpp>
#include <prymtyurin/permutation.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Img = std::vector<int>;

inline Img id(int n) {
    Img out(static_cast<std::size_t>(n));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Apply a first, then b (the library's composition convention).
inline Img compose(const Img& a, const Img& b) {
    Img out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out[x] = b[static_cast<std::size_t>(a[x])];
    }
    return out;
}

inline Img inverse(const Img& a) {
    Img out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
    }
    return out;
}

// g^{-1} a g.
inline Img conjugate(const Img& a, const Img& g) {
    return compose(compose(inverse(g), a), g);
}

inline int parity(const Img& a) {
    int inversions = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] > a[j]) ++inversions;
        }
    }
    return inversions % 2;
}

// All n! image arrays in lexicographic order.
inline std::vector<Img> symmetric(int n) {
    std::vector<Img> out;
    Img img = id(n);
    do {
        out.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

inline std::vector<Img> alternating(int n) {
    std::vector<Img> out;
    for (const Img& img : symmetric(n)) {
        if (parity(img) == 0) out.push_back(img);
    }
    return out;
}

inline std::set<Img> closure(const std::vector<Img>& generators) {
    std::set<Img> seen;
    if (generators.empty()) return seen;
    std::vector<Img> frontier{id(static_cast<int>(generators[0].size()))};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Img> next;
        for (const Img& g : frontier) {
            for (const Img& s : generators) {
                Img p = compose(g, s);
                if (seen.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

inline Img images_of(const prymtyurin::Permutation& p) { return p.images(); }

inline prymtyurin::Permutation to_perm(const Img& img) {
    return prymtyurin::Permutation::from_images(img);
}

inline std::set<Img> image_set(const std::vector<prymtyurin::Permutation>& v) {
    std::set<Img> out;
    for (const auto& p : v) out.insert(p.images());
    return out;
}

// gH (apply g first, then h, matching the library's left-to-right product).
inline std::set<Img> left_coset(const Img& g, const std::set<Img>& subgroup) {
    std::set<Img> out;
    for (const Img& h : subgroup) out.insert(compose(g, h));
    return out;
}

inline std::set<Img> right_coset(const Img& g, const std::set<Img>& subgroup) {
    std::set<Img> out;
    for (const Img& h : subgroup) out.insert(compose(h, g));
    return out;
}

inline std::set<Img> double_coset(const Img& g, const std::set<Img>& left,
                                  const std::set<Img>& right) {
    std::set<Img> out;
    for (const Img& h : left) {
        const Img hg = compose(h, g);
        for (const Img& k : right) out.insert(compose(hg, k));
    }
    return out;
}

// Partition of the whole group into H g K sets, ordered by smallest member.
inline std::vector<std::set<Img>> double_cosets(const std::set<Img>& group,
                                                const std::set<Img>& h,
                                                const std::set<Img>& k) {
    std::vector<std::set<Img>> out;
    std::set<Img> assigned;
    for (const Img& g : group) {
        if (assigned.count(g)) continue;
        std::set<Img> block = double_coset(g, h, k);
        assigned.insert(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

// Conjugacy class of g inside the listed group elements.
inline std::set<Img> conjugacy_class(const Img& g, const std::set<Img>& group) {
    std::set<Img> out;
    for (const Img& x : group) out.insert(conjugate(g, x));
    return out;
}

// (1/|H|) * sum over h in H of chi(h * g), with chi given elementwise.
template <typename Chi>
inline prymtyurin::Rational average_over(const std::set<Img>& subgroup, Chi chi) {
    prymtyurin::Rational sum = 0;
    for (const Img& h : subgroup) sum += chi(h);
    return sum / prymtyurin::Rational(static_cast<unsigned>(subgroup.size()));
}

} // namespace oracle
