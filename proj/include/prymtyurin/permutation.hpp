#ifndef PRYMTYURIN_PERMUTATION_HPP
#define PRYMTYURIN_PERMUTATION_HPP

// Permutations of {1, ..., n}.
//
// Storage is a 0-based image array; the public text format is 1-based cycle
// notation ("(1 2)(3 4)", identity "()").  Composition is the left-to-right
// action on points: (a * b) sends x to b[a[x]], i.e. apply a first, then b.
// Under this convention operator* is the abstract group product for the
// right action x^(ab) = (x^a)^b, and a word of cycles parses to the product
// of its cycles read left to right.

#include "numbers.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace prymtyurin {

class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int degree) {
        check_degree(degree);
        std::vector<int> img(static_cast<std::size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    // Accepts a 0-based image array and validates that it is a bijection.
    static Permutation from_images(std::vector<int> images) {
        const int n = static_cast<int>(images.size());
        check_degree(n);
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
                throw_input("image array is not a bijection on {1..*" +
                            std::to_string(n) + "}");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
        return Permutation(std::move(images));
    }

    // Parses 1-based cycle notation.  Cycles compose left to right.  Errors
    // carry the 0-based character position of the offending token.
    static Permutation from_cycles(const std::string& word, int degree) {
        check_degree(degree);
        Permutation result = identity(degree);
        std::size_t pos = 0;
        auto skip_space = [&] {
            while (pos < word.size() &&
                   (word[pos] == ' ' || word[pos] == '\t')) {
                ++pos;
            }
        };
        skip_space();
        if (pos == word.size()) {
            throw_input("cycle word is empty (use \"()\" for the identity)");
        }
        bool saw_cycle = false;
        while (pos < word.size()) {
            if (word[pos] != '(') {
                throw_input("cycle word \"" + word + "\": expected '(' at position " +
                            std::to_string(pos));
            }
            ++pos;
            std::vector<int> cycle;
            while (true) {
                skip_space();
                if (pos == word.size()) {
                    throw_input("cycle word \"" + word +
                                "\": unterminated cycle (missing ')')");
                }
                if (word[pos] == ')') {
                    ++pos;
                    break;
                }
                if (word[pos] < '0' || word[pos] > '9') {
                    throw_input("cycle word \"" + word +
                                "\": unexpected character '" + word[pos] +
                                "' at position " + std::to_string(pos));
                }
                long value = 0;
                while (pos < word.size() && word[pos] >= '0' && word[pos] <= '9') {
                    value = value * 10 + (word[pos] - '0');
                    if (value > degree) break;
                    ++pos;
                }
                if (value < 1 || value > degree) {
                    throw_input("cycle word \"" + word + "\": point " +
                                std::to_string(value) + " is outside 1.." +
                                std::to_string(degree));
                }
                int point = static_cast<int>(value) - 1;
                if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) {
                    throw_input("cycle word \"" + word + "\": point " +
                                std::to_string(value) + " repeats within one cycle");
                }
                cycle.push_back(point);
            }
            result = result * from_single_cycle(cycle, degree);
            saw_cycle = true;
            skip_space();
        }
        if (!saw_cycle) {
            throw_input("cycle word \"" + word + "\": no cycles found");
        }
        return result;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    const std::vector<int>& images() const { return img_; }
    int image(int point) const { return img_[static_cast<std::size_t>(point)]; }

    bool is_identity() const {
        for (int x = 0; x < degree(); ++x) {
            if (img_[static_cast<std::size_t>(x)] != x) return false;
        }
        return true;
    }

    // Apply *this first, then rhs.
    Permutation operator*(const Permutation& rhs) const {
        std::vector<int> img(img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) {
            img[x] = rhs.img_[static_cast<std::size_t>(img_[x])];
        }
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) {
            img[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
        }
        return Permutation(std::move(img));
    }

    // g^{-1} * (*this) * g.
    Permutation conjugated_by(const Permutation& g) const {
        std::vector<int> img(img_.size());
        for (std::size_t x = 0; x < img_.size(); ++x) {
            img[static_cast<std::size_t>(g.img_[x])] =
                g.img_[static_cast<std::size_t>(img_[x])];
        }
        return Permutation(std::move(img));
    }

    long long element_order() const {
        long long result = 1;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t start = 0; start < img_.size(); ++start) {
            if (seen[start]) continue;
            long long length = 0;
            std::size_t x = start;
            while (!seen[x]) {
                seen[x] = true;
                x = static_cast<std::size_t>(img_[x]);
                ++length;
            }
            result = std::lcm(result, length);
        }
        return result;
    }

    int fixed_point_count() const {
        int count = 0;
        for (int x = 0; x < degree(); ++x) {
            if (img_[static_cast<std::size_t>(x)] == x) ++count;
        }
        return count;
    }

    // Canonical disjoint-cycle text: cycles sorted by smallest point, each
    // cycle starting at its smallest point; identity prints as "()".
    std::string cycle_string() const {
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t start = 0; start < img_.size(); ++start) {
            if (seen[start] ||
                img_[start] == static_cast<int>(start)) {
                seen[start] = true;
                continue;
            }
            out += '(';
            std::size_t x = start;
            bool first = true;
            while (!seen[x]) {
                seen[x] = true;
                if (!first) out += ' ';
                out += std::to_string(x + 1);
                first = false;
                x = static_cast<std::size_t>(img_[x]);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

private:
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}

    static void check_degree(int degree) {
        if (degree < 1) throw_input("permutation degree must be at least 1");
    }

    static Permutation from_single_cycle(const std::vector<int>& cycle, int degree) {
        Permutation p = identity(degree);
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
            p.img_[static_cast<std::size_t>(cycle[i])] = cycle[i + 1];
        }
        if (cycle.size() > 1) {
            p.img_[static_cast<std::size_t>(cycle.back())] = cycle.front();
        }
        return p;
    }

    std::vector<int> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Embeds a permutation of a factor as a permutation of the full degree,
// acting on the block [offset, offset + p.degree()) and fixing the rest.
inline Permutation embed_at(const Permutation& p, int offset, int total_degree) {
    if (offset < 0 || offset + p.degree() > total_degree) {
        throw_input("embedding block exceeds total degree");
    }
    std::vector<int> img(static_cast<std::size_t>(total_degree));
    std::iota(img.begin(), img.end(), 0);
    for (int x = 0; x < p.degree(); ++x) {
        img[static_cast<std::size_t>(offset + x)] = offset + p.image(x);
    }
    return Permutation::from_images(std::move(img));
}

// True when p maps [offset, offset+length) into itself and fixes everything
// outside it.
inline bool supported_on_block(const Permutation& p, int offset, int length) {
    for (int x = 0; x < p.degree(); ++x) {
        const int y = p.image(x);
        const bool inside = x >= offset && x < offset + length;
        if (inside) {
            if (y < offset || y >= offset + length) return false;
        } else if (y != x) {
            return false;
        }
    }
    return true;
}

// True when p maps each listed block into itself (offsets partition the
// degree); such permutations are exactly the elements of a direct product.
inline bool preserves_blocks(const Permutation& p,
                             const std::vector<int>& offsets,
                             const std::vector<int>& lengths) {
    for (std::size_t b = 0; b < offsets.size(); ++b) {
        for (int x = offsets[b]; x < offsets[b] + lengths[b]; ++x) {
            const int y = p.image(x);
            if (y < offsets[b] || y >= offsets[b] + lengths[b]) return false;
        }
    }
    return true;
}

// Extracts the action of p on one block as a permutation of that block.
// Requires preserves_blocks (checked per block).
inline Permutation restrict_to_block(const Permutation& p, int offset, int length) {
    std::vector<int> img(static_cast<std::size_t>(length));
    for (int x = 0; x < length; ++x) {
        const int y = p.image(offset + x);
        if (y < offset || y >= offset + length) {
            throw_input("permutation does not preserve the factor block at offset " +
                        std::to_string(offset + 1));
        }
        img[static_cast<std::size_t>(x)] = y - offset;
    }
    return Permutation::from_images(std::move(img));
}

// Concatenates per-block permutations into one permutation of the summed degree.
inline Permutation concat_blocks(const std::vector<Permutation>& parts) {
    int total = 0;
    for (const auto& p : parts) total += p.degree();
    std::vector<int> img(static_cast<std::size_t>(total));
    int offset = 0;
    for (const auto& p : parts) {
        for (int x = 0; x < p.degree(); ++x) {
            img[static_cast<std::size_t>(offset + x)] = offset + p.image(x);
        }
        offset += p.degree();
    }
    return Permutation::from_images(std::move(img));
}

// Indices of the blocks on which p acts nontrivially.
inline std::vector<int> moved_blocks(const Permutation& p,
                                     const std::vector<int>& offsets,
                                     const std::vector<int>& lengths) {
    std::vector<int> moved;
    for (std::size_t b = 0; b < offsets.size(); ++b) {
        for (int x = offsets[b]; x < offsets[b] + lengths[b]; ++x) {
            if (p.image(x) != x) {
                moved.push_back(static_cast<int>(b));
                break;
            }
        }
    }
    return moved;
}

} // namespace prymtyurin

#endif
