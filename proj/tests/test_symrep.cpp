#include <doctest.h>

#include <hubswd/symrep.hpp>

#include <Eigen/Dense>

#include <map>
#include <random>

using namespace hubswd;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

Eigen::MatrixXd jm_dense(int j, const OrbitSpace& space) {
    return jm_matrix(j, space).mat.toDense().real();
}

}  // namespace

TEST_CASE("partitions dominating a weight, dominance-descending") {
    auto eq = [](const std::vector<Partition>& got,
                 const std::vector<std::vector<int>>& want) {
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i].parts == want[i]);
    };
    eq(partitions_dominating(8, {5, 3}, 2), {{8}, {7, 1}, {6, 2}, {5, 3}});
    eq(partitions_dominating(4, {2, 2}, 2), {{4}, {3, 1}, {2, 2}});
    eq(partitions_dominating(2, {2, 0}, 2), {{2}});
    eq(partitions_dominating(0, {0, 0}, 2), {{}});
    // weight order must not matter
    eq(partitions_dominating(4, {1, 3}, 2), {{4}, {3, 1}});
}

TEST_CASE("tableau enumeration matches hook-length dimensions") {
    CHECK(standard_tableaux(P({2, 2})).size() == 2);
    CHECK(standard_tableaux(P({5, 3})).size() == 28);
    CHECK(standard_tableaux(P({6})).size() == 1);
    CHECK(dim_irrep(P({7, 1})) == 7);
    CHECK(dim_irrep(P({6, 2})) == 20);
    CHECK(dim_irrep(P({1})) == 1);
    CHECK(dim_irrep(P({})) == 1);

    // every shape of n <= 10, not only two-row ones
    for (int n = 0; n <= 10; ++n) {
        std::vector<Partition> shapes = partitions_dominating(n, std::vector<int>(std::max(n, 1), n ? 1 : 0), n);
        long long square_sum = 0;
        for (const auto& lam : shapes) {
            long long d = dim_irrep(lam);
            CHECK(d == static_cast<long long>(standard_tableaux(lam).size()));
            square_sum += d * d;
        }
        long long factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        CHECK(square_sum == factorial);
    }
}

TEST_CASE("tableaux are ordered by row word") {
    std::vector<StandardTableau> t31 = standard_tableaux(P({3, 1}));
    REQUIRE(t31.size() == 3);
    CHECK(t31[0].label() == "(123|4)");
    CHECK(t31[1].label() == "(124|3)");
    CHECK(t31[2].label() == "(134|2)");
    std::vector<StandardTableau> t22 = standard_tableaux(P({2, 2}));
    REQUIRE(t22.size() == 2);
    CHECK(t22[0].label() == "(12|34)");
    CHECK(t22[1].label() == "(13|24)");
}

TEST_CASE("content vectors read column minus row") {
    auto t22 = standard_tableaux(P({2, 2}));
    CHECK(content_vector(t22[0]) == std::vector<int>{0, 1, -1, 0});
    CHECK(content_vector(t22[1]) == std::vector<int>{0, -1, 1, 0});
    auto t4 = standard_tableaux(P({4}));
    CHECK(content_vector(t4[0]) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("orbit spaces enumerate words lexicographically") {
    OrbitSpace space(4, 2);
    CHECK(space.dim() == 6);
    CHECK(space.weight() == std::array<int, 2>{2, 2});
    // first word has the second letter last: 0011
    CHECK(space.letter(0, 1) == 0);
    CHECK(space.letter(0, 3) == 1);
    for (int i = 1; i < space.dim(); ++i) CHECK(space.word(i - 1) < space.word(i));
    CHECK(OrbitSpace(0, 0).dim() == 1);
}

TEST_CASE("JM matrix on the two-word orbit is the exchange matrix") {
    OrbitSpace space(2, 1);
    Eigen::MatrixXd m = jm_dense(2, space);
    Eigen::MatrixXd x(2, 2);
    x << 0, 1, 1, 0;
    CHECK((m - x).norm() == 0.0);
}

TEST_CASE("JM operators commute exactly") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}, {6, 3}}) {
        OrbitSpace space(n, k);
        std::mt19937 rng(7);
        std::vector<long long> v(space.dim());
        for (auto& x : v) x = static_cast<long long>(rng() % 19) - 9;
        for (int i = 2; i <= n; ++i)
            for (int j = 2; j < i; ++j) {
                auto ij = jm_apply(i, space, jm_apply(j, space, v));
                auto ji = jm_apply(j, space, jm_apply(i, space, v));
                CHECK(ij == ji);
            }
    }
}

TEST_CASE("JM spectrum on the (2,2) orbit matches tableau contents") {
    OrbitSpace space(4, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm_dense(4, space));
    std::vector<double> got(es.eigenvalues().data(),
                            es.eigenvalues().data() + space.dim());

    std::vector<double> want;
    for (const auto& lam : partitions_dominating(4, {2, 2}, 2))
        for (const auto& y : standard_tableaux(lam))
            want.push_back(content_vector(y)[3]);
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
        CHECK(std::abs(want[i]) <= 3);
    }
}

TEST_CASE("two-site projectors are the symmetrizer and antisymmetrizer") {
    OrbitSpace space(2, 1);
    auto lams = partitions_dominating(2, {1, 1}, 2);
    REQUIRE(lams.size() == 2);
    Eigen::MatrixXd sym = young_projector(lams[0], standard_tableaux(lams[0])[0], space).mat;
    Eigen::MatrixXd antisym =
        young_projector(lams[1], standard_tableaux(lams[1])[0], space).mat;
    Eigen::MatrixXd s(2, 2), a(2, 2);
    s << 0.5, 0.5, 0.5, 0.5;
    a << 0.5, -0.5, -0.5, 0.5;
    CHECK((sym - s).norm() == 0.0);
    CHECK((antisym - a).norm() == 0.0);
}

TEST_CASE("projector algebra on all two-letter orbits up to six sites") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            OrbitSpace space(n, k);
            std::vector<Eigen::MatrixXd> projectors;
            Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(space.dim(), space.dim());
            long long dim_total = 0;
            for (const auto& lam : partitions_dominating(n, {n - k, k}, 2)) {
                dim_total += dim_irrep(lam);
                for (const auto& y : standard_tableaux(lam)) {
                    ProjectorMatrix p = young_projector(lam, y, space);
                    CHECK((p.mat * p.mat - p.mat).norm() < 1e-12);
                    CHECK((p.mat - p.mat.transpose()).norm() < 1e-12);
                    CHECK(std::abs(p.mat.trace() - 1.0) < 1e-12);
                    std::vector<int> m = content_vector(y);
                    for (int j = 2; j <= n; ++j)
                        CHECK((jm_dense(j, space) * p.mat - m[j - 1] * p.mat).norm() <
                              1e-12);
                    for (const auto& q : projectors) CHECK((p.mat * q).norm() < 1e-12);
                    projectors.push_back(p.mat);
                    sum += p.mat;
                }
            }
            // decomposition is exhaustive: multiplicities (Kostka = 1) fill the orbit
            CHECK(dim_total == space.dim());
            CHECK((sum - Eigen::MatrixXd::Identity(space.dim(), space.dim())).norm() <
                  1e-12);
        }
}

TEST_CASE("integer Gelfand-Tsetlin vector for the (2,2) column tableau") {
    OrbitSpace space(4, 2);
    auto t22 = standard_tableaux(P({2, 2}));
    std::vector<long long> v = gz_vector(space, t22[0]);
    // words in lex order: uudd, udud, uddu, duud, dudu, dduu
    CHECK(v == std::vector<long long>{2, -1, -1, -1, -1, 2});
}

TEST_CASE("irreducible bases are orthonormal and complete") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {4, 1}, {6, 3}, {5, 2}}) {
        OrbitSpace space(n, k);
        AdaptedBasis basis = irreducible_basis(space);
        Eigen::MatrixXd m = basis.matrix();
        REQUIRE(m.cols() == space.dim());
        CHECK((m.transpose() * m -
               Eigen::MatrixXd::Identity(space.dim(), space.dim()))
                  .norm() < 1e-12);
        // sign convention: first nonzero entry of each column is positive
        for (int c = 0; c < m.cols(); ++c)
            for (int r = 0; r < m.rows(); ++r) {
                if (m(r, c) == 0.0) continue;
                CHECK(m(r, c) > 0.0);
                break;
            }
    }
}

TEST_CASE("single-letter orbit carries the trivial vector") {
    OrbitSpace space(5, 0);
    AdaptedBasis basis = irreducible_basis(space);
    REQUIRE(basis.columns.size() == 1);
    CHECK(basis.columns[0].shape == P({5}));
    CHECK(basis.columns[0].coeffs[0] == 1.0);
    CHECK(basis.columns[0].label() == "{5}:T1");
}

TEST_CASE("column labels follow shape and tableau order") {
    OrbitSpace space(4, 2);
    AdaptedBasis basis = irreducible_basis(space);
    REQUIRE(basis.columns.size() == 6);
    CHECK(basis.columns[0].label() == "{4}:T1");
    CHECK(basis.columns[1].label() == "{3,1}:T1");
    CHECK(basis.columns[2].label() == "{3,1}:T2");
    CHECK(basis.columns[3].label() == "{3,1}:T3");
    CHECK(basis.columns[4].label() == "{2,2}:T1");
    CHECK(basis.columns[5].label() == "{2,2}:T2");
    for (int r = 0; r < 6; ++r)
        CHECK(basis.columns[0].coeffs[r] == doctest::Approx(std::sqrt(6.0) / 6.0));
}
