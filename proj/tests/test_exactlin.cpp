#include <doctest.h>

#include "cospan/errors.hpp"
#include "cospan/laws.hpp"
#include "cospan/rational.hpp"
#include "cospan/subspace.hpp"

using namespace cospan;

namespace {

RationalMatrix mat(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty = 0) {
  std::vector<std::vector<Rational>> qs;
  for (const auto& r : rows) qs.emplace_back(r.begin(), r.end());
  return RationalMatrix::from_rows(qs, cols_if_empty);
}

RationalMatrix random_matrix(laws::Rng& rng, int max_dim) {
  const int r = rng.range(0, max_dim), c = rng.range(1, max_dim);
  RationalMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rng.chance(0.7)) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = rng.rational();
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rational_from_string("3/6") == Rational(1, 2));
  CHECK(rational_from_string("-4/2") == Rational(-2));
  CHECK(rational_to_string(Rational(5, 1)) == "5");
  CHECK(rational_to_string(Rational(-7, 3)) == "-7/3");
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("a/b"), ParseError);
  CHECK_THROWS_AS(rational_from_string(""), ParseError);
}

TEST_CASE("rref on the named examples") {
  CHECK(rref(RationalMatrix::identity(3)) == RationalMatrix::identity(3));
  CHECK(rref(mat({{2, 4}, {1, 2}})) == mat({{1, 2}, {0, 0}}));

  laws::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalMatrix m = random_matrix(rng, 5);
    CHECK(rref(rref(m)) == rref(m));
  }
}

TEST_CASE("kernel on the named examples") {
  CHECK(kernel(RationalMatrix(3, 3)) == RationalSubspace::full(3));
  CHECK(kernel(RationalMatrix::identity(4)) == RationalSubspace::zero(4));
  CHECK(kernel(mat({{1, 1}})) == RationalSubspace::span_of_rows(mat({{1, -1}})));
}

TEST_CASE("image on the named examples") {
  CHECK(image(RationalMatrix::identity(3)) == RationalSubspace::full(3));
  CHECK(image(RationalMatrix(2, 2)) == RationalSubspace::zero(2));
  CHECK(image(mat({{1}, {1}})) == RationalSubspace::span_of_rows(mat({{1, 1}})));
}

TEST_CASE("intersection on the named examples") {
  laws::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalSubspace u = RationalSubspace::span_of_rows(random_matrix(rng, 4));
    CHECK(intersect(u, u) == u);
    CHECK(intersect(u, RationalSubspace::zero(u.ambient_dim())) ==
          RationalSubspace::zero(u.ambient_dim()));
  }
  const RationalSubspace x_axis = RationalSubspace::span_of_rows(mat({{1, 0}}));
  const RationalSubspace y_axis = RationalSubspace::span_of_rows(mat({{0, 1}}));
  CHECK(intersect(x_axis, y_axis) == RationalSubspace::zero(2));
  CHECK_THROWS_AS(intersect(x_axis, RationalSubspace::zero(3)), DomainError);
}

TEST_CASE("applying operators to subspaces") {
  const RationalSubspace diag = RationalSubspace::span_of_rows(mat({{1, 1}}));
  CHECK(apply(RationalMatrix::identity(2), diag) == diag);
  CHECK(apply(RationalMatrix(2, 2), diag) == RationalSubspace::zero(2));
  CHECK(apply(mat({{1, 0}}), diag) == RationalSubspace::full(1));
  CHECK_THROWS_AS(apply(RationalMatrix::identity(3), diag), DomainError);
}

TEST_CASE("containment") {
  const RationalSubspace diag = RationalSubspace::span_of_rows(mat({{1, 1}}));
  CHECK(contains(diag, RationalSubspace::zero(2)));
  CHECK_FALSE(contains(RationalSubspace::zero(2), diag));
  CHECK(contains(diag, diag));
  CHECK(contains(RationalSubspace::full(2), diag));
  CHECK_FALSE(contains(diag, RationalSubspace::full(2)));
}

TEST_CASE("direct sums of subspaces") {
  const RationalSubspace w = RationalSubspace::span_of_rows(mat({{1, 2}}));
  const RationalSubspace zero1 = RationalSubspace::zero(1);
  const RationalSubspace padded = direct_sum(zero1, w);
  CHECK(padded.ambient_dim() == 3);
  CHECK(padded.dim() == 1);
  CHECK(padded.basis().at(0, 0) == 0);

  CHECK(direct_sum(RationalSubspace::full(2), RationalSubspace::full(3)) ==
        RationalSubspace::full(5));

  const RationalSubspace two_lines = direct_sum(w, w);
  CHECK(two_lines.ambient_dim() == 4);
  CHECK(two_lines.dim() == 2);
}

TEST_CASE("canonicity: equal spans have identical bases") {
  laws::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalMatrix m = random_matrix(rng, 5);
    const RationalSubspace u = RationalSubspace::span_of_rows(m);
    // Rescale and shuffle rows, then add row multiples: same row space.
    RationalMatrix noisy(m.rows() * 2, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational scale = rng.rational(5, 3);
      if (scale == 0) scale = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        noisy.at(i, j) = scale * m.at(i, j);
        noisy.at(m.rows() + i, j) =
            m.at(i, j) + (i + 1 < m.rows() ? m.at(i + 1, j) : Rational(0));
      }
    }
    CHECK(RationalSubspace::span_of_rows(noisy) == u);
  }
}

TEST_CASE("rank-nullity and Grassmann identities") {
  laws::Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalMatrix m = random_matrix(rng, 6);
    CHECK(rank(m) + kernel(m).dim() == m.cols());
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int ambient = rng.range(1, 6);
    RationalMatrix a(static_cast<std::size_t>(rng.range(0, ambient)),
                     static_cast<std::size_t>(ambient));
    RationalMatrix b(static_cast<std::size_t>(rng.range(0, ambient)),
                     static_cast<std::size_t>(ambient));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (rng.chance(0.6)) a.at(i, j) = rng.rational();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (rng.chance(0.6)) b.at(i, j) = rng.rational();
    const RationalSubspace u = RationalSubspace::span_of_rows(a);
    const RationalSubspace w = RationalSubspace::span_of_rows(b);
    CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
  }
}
