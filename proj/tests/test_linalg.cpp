#include <cmath>

#include "doctest.h"
#include "support/gen.hpp"
#include "tropical/matrix.hpp"
#include "tropical/report.hpp"
#include "tropical/spectral.hpp"

using namespace tropical;

namespace {

const Matrix kSwap{{eps, Scalar(2)}, {Scalar(3), eps}};

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidValue;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("sum is entrywise max") {
    Matrix a{{Scalar(1), eps}, {Scalar(0), Scalar(2)}};
    Matrix b{{Scalar(0), Scalar(0)}, {eps, Scalar(3)}};
    CHECK(add(a, b) == Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(3)}});
    CHECK(add(a, a) == a);
    CHECK(add(a, Matrix::epsilon(2, 2)) == a);
    CHECK(kind_of([&] { add(a, Matrix(2, 3)); }) == ErrorKind::ShapeMismatch);
  }

  TEST_CASE("product") {
    CHECK(mul(kSwap, Vector{Scalar(0), Scalar(0)}) == Vector{Scalar(2), Scalar(3)});
    CHECK(mul(Matrix::identity(2), kSwap) == kSwap);
    CHECK(mul(kSwap, kSwap) == Matrix{{Scalar(5), eps}, {eps, Scalar(5)}});
    CHECK(kind_of([] { mul(Matrix(2, 3), Matrix(2, 3)); }) ==
          ErrorKind::ShapeMismatch);
    CHECK(kind_of([] { mul(Matrix(2, 3), Vector(2)); }) ==
          ErrorKind::DimensionMismatch);
  }

  TEST_CASE("scalar multiple") {
    CHECK(scale(Scalar(2), Matrix{{Scalar(1), eps}}) == Matrix{{Scalar(3), eps}});
    CHECK(scale(eps, kSwap) == Matrix::epsilon(2, 2));
    CHECK(scale(Scalar(0), kSwap) == kSwap);
  }

  TEST_CASE("power") {
    CHECK(power(kSwap, 0) == Matrix::identity(2));
    CHECK(power(kSwap, 1) == kSwap);
    CHECK(power(kSwap, 2) == Matrix{{Scalar(5), eps}, {eps, Scalar(5)}});
    CHECK(power(kSwap, 21) == scale(Scalar(50), kSwap));
    CHECK(kind_of([] { power(Matrix(2, 3), 2); }) == ErrorKind::NotSquare);
  }

  TEST_CASE("kleene star") {
    CHECK(kleene_star(Matrix{{Scalar(-1)}}) == Matrix{{Scalar(0)}});
    CHECK(kleene_star(Matrix{{eps, Scalar(-0.5)}, {Scalar(0.5), eps}}) ==
          Matrix{{Scalar(0), Scalar(-0.5)}, {Scalar(0.5), Scalar(0)}});
    CHECK(kind_of([] { kleene_star(Matrix{{Scalar(1)}}); }) ==
          ErrorKind::PositiveCycle);
  }

  TEST_CASE("zero-dimension shapes are rejected") {
    CHECK(kind_of([] { Vector(0); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { Matrix(0, 2); }) == ErrorKind::ShapeMismatch);
  }

  TEST_CASE("product is associative and distributes over sum") {
    gen::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
      std::size_t n = static_cast<std::size_t>(gen::integer(rng, 3, 5));
      Matrix a = gen::int_matrix(rng, n, n, 0.7, -9, 9);
      Matrix b = gen::int_matrix(rng, n, n, 0.7, -9, 9);
      Matrix c = gen::int_matrix(rng, n, n, 0.7, -9, 9);
      REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
      REQUIRE(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
  }

  TEST_CASE("product is monotone") {
    gen::Rng rng(22);
    for (int i = 0; i < 300; ++i) {
      Matrix a = gen::matrix(rng, 4, 4);
      Matrix b = gen::matrix(rng, 4, 4);
      Matrix bigger = add(a, gen::matrix(rng, 4, 4, 0.3));
      REQUIRE(leq(a, bigger));
      REQUIRE(leq(mul(a, b), mul(bigger, b)));
    }
  }

  TEST_CASE("powers are maximum path weights of exact length") {
    gen::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
      std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 4));
      Matrix a = gen::matrix(rng, n, n);
      for (unsigned k = 0; k <= 5; ++k) {
        Matrix p = power(a, k);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            REQUIRE(p(r, c) == gen::best_path(a, r, c, k));
      }
    }
  }

  TEST_CASE("squaring and iteration agree") {
    gen::Rng rng(24);
    for (int i = 0; i < 50; ++i) {
      Matrix a = gen::int_matrix(rng, 4, 4, 0.6, -5, 5);
      Matrix iter = Matrix::identity(4);
      for (unsigned k = 1; k <= 20; ++k) {
        iter = mul(iter, a);
        REQUIRE(power(a, k) == iter);
      }
    }
  }

  TEST_CASE("kleene series stabilizes after n-1 terms") {
    gen::Rng rng(25);
    int checked = 0;
    while (checked < 200) {
      std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 5));
      Matrix a = gen::int_matrix(rng, n, n, 0.6, -4, 4);
      Scalar lambda = max_cycle_mean(a);
      // Integer shift keeps every circuit weight exact and <= 0.
      if (lambda.is_finite())
        a = scale(Scalar(-std::ceil(lambda.value()) - gen::integer(rng, 0, 1)), a);
      ++checked;
      Matrix partial = Matrix::identity(n), term = Matrix::identity(n);
      for (std::size_t k = 1; k < n; ++k) {
        term = mul(term, a);
        partial = add(partial, term);
      }
      Matrix longer = add(partial, mul(term, a));
      REQUIRE(partial == longer);
      REQUIRE(kleene_star(a) == partial);
    }
  }

  TEST_CASE("matrix file format") {
    Matrix m = load_matrix(R"J({"rows": 2, "cols": 2, "entries": [["eps", 2], [3, "eps"]]})J");
    CHECK(m == kSwap);
    CHECK(load_matrix(R"J({"entries": [[1, "-inf"], ["ε", 0]]})J") ==
          Matrix{{Scalar(1), eps}, {eps, Scalar(0)}});
    CHECK(to_json(kSwap).dump() ==
          R"J({"rows":2,"cols":2,"entries":[["eps",2.0],[3.0,"eps"]]})J");
    CHECK(load_matrix(to_json(kSwap).dump()) == kSwap);
    CHECK(kind_of([] { load_matrix(R"J({"rows": 3, "entries": [[1]]})J"); }) ==
          ErrorKind::ShapeMismatch);
    CHECK(kind_of([] { load_matrix(R"J({"entries": [[1, 2]]})J"); }) ==
          ErrorKind::ShapeMismatch);
    CHECK(kind_of([] { load_matrix(R"J({"entries": [[true]]})J"); }) ==
          ErrorKind::SyntaxError);
    CHECK(kind_of([] { load_matrix("{\"entries\": [[1,"); }) ==
          ErrorKind::SyntaxError);
  }
}
