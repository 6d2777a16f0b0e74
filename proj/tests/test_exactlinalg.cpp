#include "qdet/errors.hpp"
#include "qdet/exact_matrix.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <array>

using qdet::DetMethod;
using qdet::ExactMatrix;
using qdet::GQ;
using qdet::PfaffianMethod;

TEST(Determinant, Examples) {
    EXPECT_EQ(qdet::determinant(ExactMatrix::identity(3)), GQ(1));
    EXPECT_EQ(qdet::determinant(ExactMatrix{{1, 2}, {3, 4}}), GQ(-2));
    EXPECT_EQ(qdet::determinant(ExactMatrix{{1, 2}, {3, 4}}, DetMethod::cofactor), GQ(-2));
    const ExactMatrix dup{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}};
    EXPECT_EQ(qdet::determinant(dup), GQ(0));
    EXPECT_EQ(qdet::determinant(dup, DetMethod::cofactor), GQ(0));
    EXPECT_EQ(qdet::determinant(ExactMatrix(0, 0)), GQ(1));
}

TEST(Determinant, NeedsPivotSwap) {
    const ExactMatrix m{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    EXPECT_EQ(qdet::determinant(m), GQ(1));
    const ExactMatrix swap{{0, 1}, {1, 0}};
    EXPECT_EQ(qdet::determinant(swap), GQ(-1));
}

TEST(Determinant, NonSquareThrows) {
    EXPECT_THROW((void)qdet::determinant(ExactMatrix(2, 3)), qdet::DomainError);
    EXPECT_THROW((void)qdet::determinant(ExactMatrix(2, 3), DetMethod::cofactor), qdet::DomainError);
}

TEST(Pfaffian, Examples) {
    const GQ m = GQ::fraction(7, 3);
    const ExactMatrix two{{0, m}, {-m, 0}};
    EXPECT_EQ(qdet::pfaffian(two), m);
    const ExactMatrix four{{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}};
    EXPECT_EQ(qdet::pfaffian(four), GQ(8));
    EXPECT_EQ(qdet::pfaffian(four, PfaffianMethod::expansion), GQ(8));
    EXPECT_EQ(qdet::pfaffian(ExactMatrix(0, 0)), GQ(1));
}

TEST(Pfaffian, RejectsOddAndNonSkew) {
    EXPECT_THROW((void)qdet::pfaffian(ExactMatrix(3, 3)), qdet::DomainError);
    EXPECT_THROW((void)qdet::pfaffian(ExactMatrix{{0, 1}, {1, 0}}), qdet::DomainError);
    EXPECT_THROW((void)qdet::pfaffian(ExactMatrix{{1, 1}, {-1, 0}}), qdet::DomainError);
}

TEST(Submatrix, Examples) {
    qdet::testing::RandomGQ rng(41);
    const ExactMatrix a = rng.matrix(4, 4);
    const auto all = qdet::index_range(1, 4);
    EXPECT_EQ(qdet::submatrix(a, all, all), a);
    const std::array<std::size_t, 1> r{3}, c{2};
    const ExactMatrix one = qdet::submatrix(a, r, c);
    ASSERT_EQ(one.rows(), 1U);
    EXPECT_EQ(one.at(1, 1), a.at(3, 2));
    const auto mid = qdet::index_range(2, 3);
    const ExactMatrix centre = qdet::submatrix(a, mid, mid);
    EXPECT_EQ(centre, (ExactMatrix{{a.at(2, 2), a.at(2, 3)}, {a.at(3, 2), a.at(3, 3)}}));
    const std::array<std::size_t, 1> bad{5};
    EXPECT_THROW((void)qdet::submatrix(a, bad, c), std::out_of_range);
    EXPECT_THROW((void)a.at(0, 1), std::out_of_range);
    EXPECT_EQ(qdet::index_range_without(4, 2), (std::vector<std::size_t>{1, 3, 4}));
    EXPECT_TRUE(qdet::index_range(3, 2).empty());
}

TEST(ExactMatrixProperty, EliminationMatchesCofactorAndLeibniz) {
    qdet::testing::RandomGQ rng(42);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const ExactMatrix m = rng.matrix(n, n);
            const GQ elim = qdet::determinant(m);
            EXPECT_EQ(elim, qdet::determinant(m, DetMethod::cofactor)) << "n=" << n;
            EXPECT_EQ(elim, qdet::testing::leibniz_det(m)) << "n=" << n;
        }
    }
}

TEST(ExactMatrixProperty, DeterminantIsMultiplicative) {
    qdet::testing::RandomGQ rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const ExactMatrix a = rng.matrix(4, 4), b = rng.matrix(4, 4);
        EXPECT_EQ(qdet::determinant(a * b), qdet::determinant(a) * qdet::determinant(b));
        EXPECT_EQ(qdet::determinant(a.transpose()), qdet::determinant(a));
    }
}

TEST(ExactMatrixProperty, DesnanotJacobi) {
    qdet::testing::RandomGQ rng(44);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const ExactMatrix a = rng.matrix(n, n);
            const auto inner = qdet::index_range(2, n - 1);
            const auto head = qdet::index_range(1, n - 1);
            const auto tail = qdet::index_range(2, n);
            auto d = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
                return qdet::determinant(qdet::submatrix(a, r, c));
            };
            EXPECT_EQ(d(inner, inner) * qdet::determinant(a), d(head, head) * d(tail, tail) - d(head, tail) * d(tail, head))
                << "n=" << n;
        }
    }
}

TEST(ExactMatrixProperty, CauchyBinet) {
    qdet::testing::RandomGQ rng(45);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t big = n; big <= 5; ++big) {
            const ExactMatrix a = rng.matrix(n, big), b = rng.matrix(big, n);
            const auto rows = qdet::index_range(1, n);
            GQ sum;
            for (const auto& s : qdet::testing::subsets(big, n))
                sum += qdet::determinant(qdet::submatrix(a, rows, s)) * qdet::determinant(qdet::submatrix(b, s, rows));
            EXPECT_EQ(qdet::determinant(a * b), sum) << n << "x" << big;
        }
    }
}

TEST(ExactMatrixProperty, PfaffianSquaredIsDeterminant) {
    qdet::testing::RandomGQ rng(46);
    for (std::size_t m = 1; m <= 4; ++m) {
        for (int trial = 0; trial < 5; ++trial) {
            const ExactMatrix s = rng.skew(2 * m);
            const GQ pf = qdet::pfaffian(s);
            EXPECT_EQ(pf * pf, qdet::determinant(s)) << "2m=" << 2 * m;
            EXPECT_EQ(pf, qdet::pfaffian(s, PfaffianMethod::expansion));
            EXPECT_EQ(pf, qdet::testing::permutation_pfaffian(s));
        }
    }
}

TEST(ExactMatrixProperty, PfaffianOfCongruence) {
    // Pf(B A B^T) = det(B) Pf(A)
    qdet::testing::RandomGQ rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        const ExactMatrix a = rng.skew(6), b = rng.matrix(6, 6);
        EXPECT_EQ(qdet::pfaffian(b * a * b.transpose()), qdet::determinant(b) * qdet::pfaffian(a));
    }
}
