#include <doctest.h>

#include <random>

#include "khcob/f2linalg.hpp"
#include "khcob/sparse.hpp"
#include "oracle.hpp"

using namespace khcob::f2;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double p) {
  std::bernoulli_distribution bit(p);
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (bit(rng)) m.set(i, j);
  return m;
}

oracle::Dense to_bytes(const BitMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<std::uint8_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j);
  return d;
}

}  // namespace

TEST_SUITE("f2linalg") {
  TEST_CASE("rank agrees with the byte-matrix oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(0, 150);
    for (int t = 0; t < 200; ++t) {
      auto m = random_matrix(rng, dim(rng), dim(rng), t % 2 ? 0.5 : 0.05);
      CHECK(rank(m) == oracle::naive_rank(to_bytes(m)));
    }
  }

  TEST_CASE("rank-nullity and kernel vectors map to zero") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
      auto m = random_matrix(rng, 40 + t, 70, 0.1);
      auto ker = kernel_basis(m);
      CHECK(rank(m) + ker.size() == m.cols());
      for (auto& v : ker) CHECK_FALSE((m * v).any());
      CHECK(image_basis(m).size() == rank(m));
    }
  }

  TEST_CASE("solve finds preimages and rejects vectors outside the image") {
    std::mt19937_64 rng(3);
    auto m = random_matrix(rng, 30, 20, 0.2);
    BitVector x(20);
    x.set(3), x.set(17);
    auto b = m * x;
    auto y = solve(m, b);
    REQUIRE(y);
    CHECK(m * *y == b);

    BitMatrix z(3, 2);
    z.set(0, 0);
    BitVector e(3);
    e.set(2);
    CHECK_FALSE(solve(z, e));
  }

  TEST_CASE("dimension mismatch throws") {
    BitMatrix a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionMismatch);
  }

  TEST_CASE("transpose and products across word boundaries") {
    std::mt19937_64 rng(5);
    auto a = random_matrix(rng, 65, 130, 0.3);
    auto b = random_matrix(rng, 130, 70, 0.3);
    CHECK(a.transpose().transpose() == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a * BitMatrix::identity(130) == a);
  }

  TEST_CASE("sparse maps agree with dense arithmetic") {
    std::mt19937_64 rng(9);
    auto a = random_matrix(rng, 40, 50, 0.1);
    auto b = random_matrix(rng, 50, 30, 0.1);
    auto sa = SparseMap::from_dense(a), sb = SparseMap::from_dense(b);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK(sa.transpose().to_dense() == a.transpose());
    CHECK((sa + sa).is_zero());
    auto e = SparseMap::from_entries(3, 3, {{0, 1}, {0, 1}, {2, 2}});
    CHECK(e.nnz() == 1);
    CHECK(e.get(2, 2));
  }

  TEST_CASE("sparse vector helpers") {
    SparseVec v{5, 1, 3, 1};
    normalize(v);
    CHECK(v == SparseVec{3, 5});
    xor_into(v, SparseVec{2, 3});
    CHECK(v == SparseVec{2, 5});
  }
}
