#include <catch2/catch_amalgamated.hpp>

#include <prymtyurin/engine.hpp>
#include <prymtyurin/intmatrix.hpp>

#include <random>
#include <vector>

namespace pt = prymtyurin;

namespace {

pt::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                            std::size_t cols, int span) {
    pt::IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> dist(-span, span);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = dist(rng);
        }
    }
    return m;
}

// Independent rank computation: Gaussian elimination over the rationals.
std::size_t rational_rank(const pt::IntMatrix& m) {
    std::vector<std::vector<pt::Rational>> a(
        m.rows(), std::vector<pt::Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            a[i][j] = pt::Rational(m.at(i, j));
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const pt::Rational factor = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) {
                a[i][j] -= factor * a[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

// Naive product used as the multiplication oracle.
pt::IntMatrix naive_product(const pt::IntMatrix& a, const pt::IntMatrix& b) {
    pt::IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            pt::Integer sum = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                sum += a.at(i, k) * b.at(k, j);
            }
            out.at(i, j) = sum;
        }
    }
    return out;
}

} // namespace

TEST_CASE("matrix arithmetic matches direct computation") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_matrix(rng, 4, 5, 6);
        const auto b = random_matrix(rng, 5, 3, 6);
        CHECK(a * b == naive_product(a, b));

        const auto c = random_matrix(rng, 4, 5, 6);
        const auto sum = a + c;
        const auto diff = a - c;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 5; ++j) {
                CHECK(sum.at(i, j) == a.at(i, j) + c.at(i, j));
                CHECK(diff.at(i, j) == a.at(i, j) - c.at(i, j));
            }
        }
        CHECK(a.scaled(3) + a.scaled(-3) == pt::IntMatrix(4, 5));
    }

    const auto id = pt::IntMatrix::identity(4);
    CHECK(id * id == id);
    CHECK(id.trace() == 4);
    CHECK(pt::IntMatrix::constant(3, 3, 2).trace() == 6);
    CHECK(pt::IntMatrix(2, 2).is_zero());
    CHECK_FALSE(id.is_zero());

    try {
        pt::IntMatrix(2, 3).trace();
        FAIL("expected an input error");
    } catch (const pt::Error& e) {
        CHECK(e.kind() == pt::ErrorKind::Input);
    }
}

TEST_CASE("kronecker products combine blocks in row-major order") {
    pt::IntMatrix a(2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 2;
    a.at(1, 0) = 3; a.at(1, 1) = 4;
    pt::IntMatrix b(2, 2);
    b.at(0, 0) = 0; b.at(0, 1) = 5;
    b.at(1, 0) = 6; b.at(1, 1) = 7;

    const auto k = pt::kronecker(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    // Block (i, j) of the result is a[i][j] * b; the first factor is the
    // outer (slow) index.
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t u = 0; u < 2; ++u) {
                for (std::size_t v = 0; v < 2; ++v) {
                    CHECK(k.at(i * 2 + u, j * 2 + v) ==
                          a.at(i, j) * b.at(u, v));
                }
            }
        }
    }

    // Mixed-dimension sanity: (2x3) kron (1x2) is 2x6.
    std::mt19937 rng(5);
    const auto rect = pt::kronecker(random_matrix(rng, 2, 3, 4),
                                    pt::IntMatrix::constant(1, 2, 1));
    CHECK(rect.rows() == 2);
    CHECK(rect.cols() == 6);
}

TEST_CASE("fraction-free rank agrees with rational elimination") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = random_matrix(rng, 6, 6, 4);
        CHECK(pt::rank_fraction_free(m) == rational_rank(m));
    }
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_matrix(rng, 4, 7, 3);
        CHECK(pt::rank_fraction_free(m) == rational_rank(m));
    }

    CHECK(pt::rank_fraction_free(pt::IntMatrix::identity(5)) == 5);
    CHECK(pt::rank_fraction_free(pt::IntMatrix(3, 3)) == 0);
    CHECK(pt::rank_fraction_free(pt::IntMatrix::constant(4, 4, 7)) == 1);

    // aI + bJ has full rank unless a = 0 or a = -nb.
    const auto j3 = pt::IntMatrix::constant(3, 3, 1);
    const auto m1 = pt::IntMatrix::identity(3).scaled(3) - j3;  // a=3, b=-1
    CHECK(pt::rank_fraction_free(m1) == 2);
    const auto m2 = pt::IntMatrix::identity(3).scaled(2) + j3;
    CHECK(pt::rank_fraction_free(m2) == 3);

    // Rank is multiplicative under kronecker products.
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_matrix(rng, 3, 3, 3);
        const auto b = random_matrix(rng, 3, 3, 3);
        CHECK(pt::rank_fraction_free(pt::kronecker(a, b)) ==
              pt::rank_fraction_free(a) * pt::rank_fraction_free(b));
    }
}

TEST_CASE("coset-action commutation shortcut equals literal matrix products") {
    std::mt19937 rng(41);
    const std::size_t n = 6;

    auto random_sigma = [&] {
        std::vector<std::size_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        std::shuffle(sigma.begin(), sigma.end(), rng);
        return sigma;
    };

    auto relabel_invariant = [&](const pt::IntMatrix& m,
                                 const std::vector<std::size_t>& sigma) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                if (m.at(sigma[u], sigma[v]) != m.at(u, v)) return false;
            }
        }
        return true;
    };

    for (int trial = 0; trial < 40; ++trial) {
        const auto sigma = random_sigma();
        const auto p = pt::action_matrix(sigma);
        // P has exactly one 1 per row and column.
        CHECK(pt::rank_fraction_free(p) == n);

        // Invariant matrices commute, generic ones do not; the shortcut and
        // the literal product must agree either way.
        const auto m = (trial % 2 == 0)
                           ? random_matrix(rng, n, n, 5)
                           : pt::IntMatrix::identity(n).scaled(4) -
                                 pt::IntMatrix::constant(n, n, 1);
        CHECK(relabel_invariant(m, sigma) == (p * m == m * p));
    }

    // An aI + bJ matrix is invariant under every relabeling.
    const auto invariant = pt::IntMatrix::identity(n).scaled(7) +
                           pt::IntMatrix::constant(n, n, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto sigma = random_sigma();
        CHECK(relabel_invariant(invariant, sigma));
        const auto p = pt::action_matrix(sigma);
        CHECK(p * invariant == invariant * p);
    }
}
