#include <catch2/catch_amalgamated.hpp>

#include <prymtyurin/permutation.hpp>

#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace pt = prymtyurin;

namespace {

pt::Permutation random_perm(std::mt19937& rng, int degree) {
    oracle::Img img = oracle::id(degree);
    std::shuffle(img.begin(), img.end(), rng);
    return pt::Permutation::from_images(img);
}

template <typename Fn>
pt::ErrorKind error_kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const pt::Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return pt::ErrorKind::Input;
}

} // namespace

TEST_CASE("cycle parsing produces the expected images") {
    const auto p = pt::Permutation::from_cycles("(1 2 3)(4 5)", 6);
    CHECK(p.images() == oracle::Img{1, 2, 0, 4, 3, 5});

    CHECK(pt::Permutation::from_cycles("()", 4) == pt::Permutation::identity(4));
    CHECK(pt::Permutation::from_cycles(" ( 1 2 ) ( 3 4 ) ", 4).images() ==
          oracle::Img{1, 0, 3, 2});

    const auto big = pt::Permutation::from_cycles("(1 10)", 10);
    CHECK(big.image(0) == 9);
    CHECK(big.image(9) == 0);
    CHECK(big.fixed_point_count() == 8);

    // Non-disjoint cycles compose left to right: (1 2) then (1 3).
    const auto composed = pt::Permutation::from_cycles("(1 2)(1 3)", 3);
    CHECK(composed.images() == oracle::Img{1, 2, 0});
    CHECK(composed.cycle_string() == "(1 2 3)");
}

TEST_CASE("cycle parsing rejects malformed words with input errors") {
    const int n = 5;
    auto parse = [&](const std::string& word) {
        return [word, n] { pt::Permutation::from_cycles(word, n); };
    };
    CHECK(error_kind_of(parse("(1 2")) == pt::ErrorKind::Input);
    CHECK(error_kind_of(parse("(0 1)")) == pt::ErrorKind::Input);
    CHECK(error_kind_of(parse("(1 7)")) == pt::ErrorKind::Input);
    CHECK(error_kind_of(parse("(1 2 2)")) == pt::ErrorKind::Input);
    CHECK(error_kind_of(parse("")) == pt::ErrorKind::Input);
    CHECK(error_kind_of(parse("x")) == pt::ErrorKind::Input);
    CHECK(error_kind_of(parse("(1 2) junk")) == pt::ErrorKind::Input);
    CHECK(error_kind_of([] { pt::Permutation::from_cycles("(1)", 0); }) ==
          pt::ErrorKind::Input);

    CHECK_THROWS_WITH(pt::Permutation::from_cycles("(1 2 2)", 5),
                      Catch::Matchers::ContainsSubstring("repeats"));
    CHECK_THROWS_WITH(pt::Permutation::from_cycles("(1 7)", 5),
                      Catch::Matchers::ContainsSubstring("outside 1..5"));
}

TEST_CASE("composition applies the left operand first") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_perm(rng, 8);
        const auto b = random_perm(rng, 8);
        CHECK((a * b).images() == oracle::compose(a.images(), b.images()));
    }
    // Worked example: x^(ab) = (x^a)^b, so (1 2)(2 3) sends 1 to 3.
    const auto a = pt::Permutation::from_cycles("(1 2)", 3);
    const auto b = pt::Permutation::from_cycles("(2 3)", 3);
    CHECK((a * b).cycle_string() == "(1 3 2)");
    CHECK((b * a).cycle_string() == "(1 2 3)");
}

TEST_CASE("inverse and conjugation match the composition convention") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_perm(rng, 7);
        const auto g = random_perm(rng, 7);
        CHECK((p * p.inverse()).is_identity());
        CHECK((p.inverse() * p).is_identity());
        CHECK(p.inverse().images() == oracle::inverse(p.images()));
        CHECK(p.conjugated_by(g).images() ==
              oracle::conjugate(p.images(), g.images()));
    }
}

TEST_CASE("element order equals the repeated-product order") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_perm(rng, 9);
        long long brute = 1;
        pt::Permutation power = p;
        while (!power.is_identity()) {
            power = power * p;
            ++brute;
        }
        CHECK(p.element_order() == brute);
    }
    CHECK(pt::Permutation::from_cycles("(1 2 3)(4 5)", 5).element_order() == 6);
    CHECK(pt::Permutation::identity(4).element_order() == 1);
}

TEST_CASE("cycle text round-trips and counts fixed points") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_perm(rng, 10);
        CHECK(pt::Permutation::from_cycles(p.cycle_string(), 10) == p);
        int fixed = 0;
        for (int x = 0; x < 10; ++x) {
            if (p.image(x) == x) ++fixed;
        }
        CHECK(p.fixed_point_count() == fixed);
    }
    CHECK(pt::Permutation::identity(6).cycle_string() == "()");
}

TEST_CASE("image arrays validate as bijections") {
    CHECK_NOTHROW(pt::Permutation::from_images({2, 0, 1}));
    CHECK(error_kind_of([] { pt::Permutation::from_images({0, 0, 1}); }) ==
          pt::ErrorKind::Input);
    CHECK(error_kind_of([] { pt::Permutation::from_images({0, 3, 1}); }) ==
          pt::ErrorKind::Input);
}

TEST_CASE("block embedding, restriction, and concatenation") {
    const auto inner = pt::Permutation::from_cycles("(1 2 3)", 3);
    const auto embedded = pt::embed_at(inner, 3, 7);
    CHECK(embedded.cycle_string() == "(4 5 6)");
    CHECK(pt::supported_on_block(embedded, 3, 3));
    CHECK_FALSE(pt::supported_on_block(embedded, 0, 3));
    CHECK(pt::restrict_to_block(embedded, 3, 3) == inner);

    const std::vector<int> offsets{0, 3, 6};
    const std::vector<int> lengths{3, 3, 1};
    CHECK(pt::preserves_blocks(embedded, offsets, lengths));
    CHECK(pt::moved_blocks(embedded, offsets, lengths) == std::vector<int>{1});

    const auto crossing = pt::Permutation::from_cycles("(3 4)", 7);
    CHECK_FALSE(pt::preserves_blocks(crossing, offsets, lengths));
    CHECK(error_kind_of([&] { pt::restrict_to_block(crossing, 0, 3); }) ==
          pt::ErrorKind::Input);

    const auto glued = pt::concat_blocks(
        {pt::Permutation::from_cycles("(1 2)", 2),
         pt::Permutation::from_cycles("(1 2 3)", 3)});
    CHECK(glued == pt::Permutation::from_cycles("(1 2)(3 4 5)", 5));

    CHECK(error_kind_of([&] { pt::embed_at(inner, 5, 7); }) ==
          pt::ErrorKind::Input);
}

TEST_CASE("ordering is lexicographic on image arrays") {
    const auto e = pt::Permutation::identity(3);
    const auto t12 = pt::Permutation::from_cycles("(1 2)", 3);
    const auto t23 = pt::Permutation::from_cycles("(2 3)", 3);
    CHECK(e < t23);
    CHECK(t23 < t12);
    CHECK(e == pt::Permutation::from_images({0, 1, 2}));

    std::vector<pt::Permutation> perms{t12, e, t23};
    std::sort(perms.begin(), perms.end());
    CHECK(perms.front() == e);
    CHECK(perms[1] == t23);
    CHECK(perms.back() == t12);
}
