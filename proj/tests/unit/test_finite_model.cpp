#include "intertwine/errors.hpp"
#include "intertwine/finite_model.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <sstream>

using namespace intertwine;

namespace {

FqMatrix random_invertible(int n, const Fq& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, f.q() - 1);
  while (true) {
    FqMatrix g(n, n);
    for (auto& v : g.a) v = e(rng);
    if (rank(g, f) == n) return g;
  }
}

mpz_class gauss(int n, int d, int q) { return mpz_class(static_cast<long>(oracle::gaussian_product(n, d, q))); }

}  // namespace

TEST(Fq, FieldAxiomsExhaustive) {
  for (int q : {2, 3, 4, 5, 7}) {
    const Fq f(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        if (a && b) EXPECT_NE(f.mul(a, b), 0);
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    std::set<int> powers;
    for (int x = 1, t = 0; t < q - 1; ++t, x = f.mul(x, f.primitive())) powers.insert(x);
    EXPECT_EQ(powers.size(), static_cast<std::size_t>(q - 1));
  }
  EXPECT_EQ(Fq(4).add(1, 1), 0);  // characteristic 2
  EXPECT_THROW(Fq(6), DomainError);
  EXPECT_THROW(Fq(8), DomainError);
  EXPECT_THROW(Fq(3).inv(0), DomainError);
}

TEST(Subspaces, Examples) {
  EXPECT_EQ(enumerate_subspaces(1, 3, 2).size(), 7u);
  EXPECT_EQ(enumerate_subspaces(0, 3, 5).size(), 1u);
  EXPECT_EQ(enumerate_subspaces(2, 4, 3).size(), 130u);
  EXPECT_EQ(gaussian_binomial(4, 2, 3), 130);
  EXPECT_THROW(enumerate_subspaces(3, 2, 2), DomainError);
  EXPECT_THROW(enumerate_subspaces(1, 2, 6), DomainError);
}

TEST(Subspaces, CountsMatchGaussianBinomials) {
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (int d = 0; d <= n; ++d) {
        const auto count = enumerate_subspaces(d, n, q).size();
        EXPECT_EQ(static_cast<long long>(count), oracle::gaussian_product(n, d, q)) << d << " " << n << " " << q;
        EXPECT_EQ(gaussian_binomial(n, d, q), gauss(n, d, q));
      }
  for (int n = 0; n <= 3; ++n)
    for (int d = 0; d <= n; ++d)
      EXPECT_EQ(static_cast<long long>(enumerate_subspaces(d, n, 4).size()), oracle::gaussian_product(n, d, 4));
}

TEST(Subspaces, SpanningOracle) {
  for (auto [d, n, q] : {std::tuple{1, 3, 2}, {2, 3, 2}, {2, 4, 2}, {1, 3, 3}, {2, 3, 3}, {1, 2, 4}, {2, 3, 4}})
    EXPECT_EQ(enumerate_subspaces(d, n, q).size(), oracle::count_subspaces_by_spanning(d, n, q));
}

TEST(Subspaces, CanonicalRref) {
  for (int q : {2, 3, 4})
    for (const auto& v : enumerate_subspaces(2, 4, q)) {
      int last_pivot = -1;
      for (int r = 0; r < v.d; ++r) {
        int pivot = 0;
        while (v.basis[static_cast<std::size_t>(r * v.n + pivot)] == 0) ++pivot;
        EXPECT_GT(pivot, last_pivot);
        EXPECT_EQ(v.basis[static_cast<std::size_t>(r * v.n + pivot)], 1);
        for (int o = 0; o < v.d; ++o)
          if (o != r) EXPECT_EQ(v.basis[static_cast<std::size_t>(o * v.n + pivot)], 0);
        last_pivot = pivot;
      }
      FqMatrix m(v.d, v.n);
      m.a = v.basis;
      EXPECT_EQ(row_space(m, Fq(q)), v);
    }
  const auto all = enumerate_subspaces(2, 4, 3);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST(Act, Examples) {
  const Fq f(2);
  const auto lines = enumerate_subspaces(1, 3, 2);
  for (const auto& v : lines) EXPECT_EQ(act(FqMatrix::identity(3), v, f), v);

  FqMatrix swap(3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = 1;
  const Subspace e1{1, 3, {1, 0, 0}}, e2{1, 3, {0, 1, 0}};
  EXPECT_EQ(act(swap, e1, f), e2);

  FqMatrix singular(3, 3);
  singular(0, 0) = 1;
  EXPECT_THROW(act(singular, e1, f), DomainError);
}

TEST(Act, GroupActionExhaustiveAtThreeTwo) {
  const Fq f(2);
  std::vector<FqMatrix> group;
  for (int bits = 0; bits < 512; ++bits) {
    FqMatrix g(3, 3);
    for (int e = 0; e < 9; ++e) g.a[static_cast<std::size_t>(e)] = (bits >> e) & 1;
    if (rank(g, f) == 3) group.push_back(g);
  }
  ASSERT_EQ(group.size(), 168u);
  for (int d = 0; d <= 3; ++d) {
    const auto subs = enumerate_subspaces(d, 3, 2);
    for (const auto& g : group) {
      std::set<Subspace> image;
      for (const auto& v : subs) image.insert(act(g, v, f));
      EXPECT_EQ(image.size(), subs.size());
    }
  }
  const auto lines = enumerate_subspaces(1, 3, 2);
  for (std::size_t a = 0; a < group.size(); a += 7)
    for (std::size_t b = 0; b < group.size(); b += 5)
      for (const auto& v : lines)
        EXPECT_EQ(act(multiply(group[a], group[b], f), v, f), act(group[b], act(group[a], v, f), f));
}

TEST(Act, CompatibilityOnRandomPairs) {
  std::mt19937_64 rng(3);
  for (auto [n, q] : {std::pair{4, 3}, {3, 4}, {4, 2}}) {
    const Fq f(q);
    const auto subs = enumerate_subspaces(2, n, q);
    for (int t = 0; t < 20; ++t) {
      const FqMatrix g = random_invertible(n, f, rng), h = random_invertible(n, f, rng);
      const Subspace& v = subs[static_cast<std::size_t>(t * 7) % subs.size()];
      EXPECT_EQ(act(multiply(g, h, f), v, f), act(h, act(g, v, f), f));
    }
  }
}

TEST(RadonMatrix, Fano) {
  const ExactMatrix m = radon_matrix(1, 2, 3, 2);
  ASSERT_EQ(m.rows(), 7u);
  ASSERT_EQ(m.cols(), 7u);
  for (const auto& s : m.row_sums()) EXPECT_EQ(s, 3);
  EXPECT_EQ(rank_exact(m), 7u);
  EXPECT_EQ(oracle::rank_mpq(m), 7u);
  EXPECT_THROW(radon_matrix(2, 2, 3, 2), DomainError);
  EXPECT_THROW(radon_matrix(1, 4, 3, 2), DomainError);
}

TEST(RadonMatrix, RowSumsAreGaussianBinomials) {
  for (int q : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (int b = 1; b <= n; ++b)
        for (int a = 0; a < b; ++a)
          for (const auto& s : radon_matrix(a, b, n, q).row_sums()) EXPECT_EQ(s, gauss(b, a, q));
}

TEST(RadonMatrix, ZeroDimensionalSourceIsAllOnesColumn) {
  const ExactMatrix m = radon_matrix(0, 2, 3, 2);
  EXPECT_EQ(m, ExactMatrix::ones(7, 1));
  // factoring through constants: rank one
  EXPECT_EQ(rank_exact(m * m.transpose()), 1u);
}

TEST(IncidenceMatrix, Examples) {
  const ExactMatrix m = incidence_matrix(1, 1, 2, 2, 0);
  ASSERT_EQ(m.rows(), 3u);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(m(r, c), r == c ? 0 : 1);
  EXPECT_EQ(incidence_matrix(1, 2, 3, 2, 1), radon_matrix(1, 2, 3, 2));
  EXPECT_EQ(incidence_matrix(1, 3, 4, 3, 1), radon_matrix(1, 3, 4, 3));
  const auto sums = incidence_matrix(1, 1, 3, 2, 0).row_sums();
  for (const auto& s : sums) EXPECT_EQ(s, sums.front());
  EXPECT_THROW(incidence_matrix(1, 1, 3, 2, 2), DomainError);
}

TEST(Equivariance, Examples) {
  EXPECT_TRUE(check_equivariance(radon_matrix(1, 2, 3, 2), 1, 2, 3, 2));
  EXPECT_TRUE(check_equivariance(incidence_matrix(1, 1, 3, 2, 0), 1, 1, 3, 2));

  std::mt19937_64 rng(2024);
  std::bernoulli_distribution coin(0.5);
  ExactMatrix noise(7, 7);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) noise(r, c) = coin(rng) ? 1 : 0;
  const auto report = equivariance_report(noise, 1, 2, 3, 2);
  EXPECT_FALSE(report.equivariant);
  EXPECT_LT(report.first_failure, report.generators_checked);

  EXPECT_THROW(check_equivariance(noise, 1, 1, 4, 2), DomainError);
}

TEST(Equivariance, GeneratorSet) {
  EXPECT_EQ(equivariance_generators(3, Fq(2)).size(), 6u);
  const auto gens = equivariance_generators(3, Fq(3));
  ASSERT_EQ(gens.size(), 7u);
  EXPECT_EQ(gens.back()(0, 0), 2);
}

TEST(Equivariance, AllKernelsInRange) {
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          if (a < b) EXPECT_TRUE(check_equivariance(radon_matrix(a, b, n, q), a, b, n, q));
          for (int r = 0; r <= std::min(a, b); ++r)
            EXPECT_TRUE(check_equivariance(incidence_matrix(a, b, n, q, r), a, b, n, q));
        }
}

TEST(Compose, Examples) {
  const ExactMatrix m = radon_matrix(1, 2, 3, 2);
  const auto [product, nonzero] = compose_and_test_nonzero({m, m.transpose()});
  EXPECT_TRUE(nonzero);
  for (const auto& s : product.row_sums()) EXPECT_EQ(s, 9);
  // M M^t = 2 I + J on the Fano plane
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) EXPECT_EQ(product(r, c), r == c ? 3 : 1);

  EXPECT_TRUE(compose_and_test_nonzero({ExactMatrix::ones(4, 4)}).second);
  EXPECT_FALSE(compose_and_test_nonzero({m, ExactMatrix(7, 7)}).second);
  EXPECT_THROW(compose_and_test_nonzero({m, ExactMatrix(3, 3)}), DomainError);
  EXPECT_THROW(compose_and_test_nonzero({}), DomainError);
}

TEST(Compose, RadonChainIsScalarMultiple) {
  for (auto [a, b, c, n, q] : {std::tuple{0, 1, 2, 3, 2}, {1, 2, 3, 4, 2}}) {
    const ExactMatrix chain = radon_matrix(b, c, n, q) * radon_matrix(a, b, n, q);
    const ExactMatrix direct = radon_matrix(a, c, n, q);
    ASSERT_EQ(chain.rows(), direct.rows());
    std::optional<mpz_class> scalar;
    for (std::size_t r = 0; r < chain.rows(); ++r)
      for (std::size_t col = 0; col < chain.cols(); ++col) {
        if (direct(r, col) == 0) {
          EXPECT_EQ(chain(r, col), 0);
          continue;
        }
        if (!scalar) scalar = chain(r, col);
        EXPECT_EQ(chain(r, col), *scalar);
      }
    ASSERT_TRUE(scalar);
    // subspaces strictly between V_a and V_c of dimension b
    EXPECT_EQ(*scalar, gauss(c - a, b - a, q));
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank_exact(ExactMatrix::ones(7, 7)), 1u);
  EXPECT_EQ(rank_exact(ExactMatrix(4, 5)), 0u);
  EXPECT_EQ(rank_exact(ExactMatrix()), 0u);
}

TEST(Rank, BareissAgreesWithRationalGaussJordan) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> dim(1, 7), entry(-4, 4), sparsity(0, 2);
  for (int t = 0; t < 300; ++t) {
    const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparsity(rng) ? 0 : entry(rng);
    // force some dependent rows
    if (rows > 2)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 3 - m(1, c) * 2;
    EXPECT_EQ(rank_exact(m), oracle::rank_mpq(m));
    EXPECT_EQ(rank_exact(m), rank_exact(m.transpose()));
  }
}

TEST(Rank, TransposeDuality) {
  for (int q : {2, 3})
    for (int n = 2; n <= 4; ++n)
      for (int b = 1; b <= n; ++b)
        for (int a = 0; a < b; ++a) {
          const ExactMatrix m = radon_matrix(a, b, n, q);
          EXPECT_EQ(rank_exact(m), rank_exact(m.transpose()));
        }
}

TEST(MatrixText, RoundTripAndErrors) {
  const ExactMatrix m = radon_matrix(1, 2, 3, 2);
  EXPECT_EQ(ExactMatrix::from_text(m.to_text()), m);
  EXPECT_EQ(ExactMatrix(2, 2).to_text(), "2 2\n0 0\n0 0\n");
  EXPECT_THROW(ExactMatrix::from_text("2"), ParseError);
  EXPECT_THROW(ExactMatrix::from_text("1 2\n3"), ParseError);
  EXPECT_THROW(ExactMatrix::from_text("1 1\nx"), ParseError);
  EXPECT_THROW(ExactMatrix::from_text("1 1\n1 2"), ParseError);
}

TEST(MatrixText, FanoFixture) {
  const char* dir = std::getenv("INTERTWINE_FIXTURES");
  ASSERT_NE(dir, nullptr);
  std::ifstream f(std::string(dir) + "/fano_1_2_3_2.txt");
  ASSERT_TRUE(f);
  std::stringstream text;
  text << f.rdbuf();
  EXPECT_EQ(radon_matrix(1, 2, 3, 2).to_text(), text.str());
}
