#include <doctest.h>

#include <chrono>
#include <vector>

#include "pentasolve/baselines.hpp"
#include "pentasolve/bench.hpp"
#include "pentasolve/errors.hpp"
#include "pentasolve/fast_solver.hpp"
#include "pentasolve/rng.hpp"
#include "test_support.hpp"

using namespace pentasolve;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  Xoshiro256pp rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform01();
  return x;
}

}  // namespace

TEST_CASE("densify reproduces the band definition") {
  SUBCASE("identity") {
    const DenseMatrix m = densify(PentaToeplitz(3, 0, 0, 1, 0, 0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(m.at(i, j) == (i == j ? 1.0 : 0.0));
  }
  SUBCASE("preset bands, n = 5") {
    const DenseMatrix m = densify(PentaToeplitz(5, 5, 2, 4, 1, 3));
    const std::vector<double> expected{4, 1, 3, 0, 0,   //
                                       2, 4, 1, 3, 0,   //
                                       5, 2, 4, 1, 3,   //
                                       0, 5, 2, 4, 1,   //
                                       0, 0, 5, 2, 4};
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        CHECK(m.at(i, j) == expected[i * 5 + j]);
  }
  SUBCASE("n = 1 keeps only the main diagonal") {
    const DenseMatrix m = densify(PentaToeplitz(1, 1, 0.2, 0.1, 0.2, 0.5));
    CHECK(m.at(0, 0) == 0.1);
  }
  SUBCASE("dense size guard") {
    CHECK_THROWS_AS(densify(PentaToeplitz(4097, 1, 1, 1, 1, 1)), SolveError);
    CHECK_NOTHROW(densify(PentaToeplitz(4096, 1, 1, 1, 1, 1)));
  }
}

TEST_CASE("dense multiply agrees with the banded matvec") {
  const PentaToeplitz a(9, 5, 2, 4, 1, 3);
  const std::vector<double> x = random_vector(9, 12);
  const auto dense = testsupport::dense_penta(9, 5, 2, 4, 1, 3);
  CHECK(densify(a).multiply(x) == testsupport::dense_matvec(dense, 9, x));
}

TEST_CASE("plu_solve on the identity returns b") {
  const DenseMatrix eye = densify(PentaToeplitz(6, 0, 0, 1, 0, 0));
  const std::vector<double> b{1, 2, 3, 4, 5, 6};
  const SolveReport rep = plu_solve(eye, b);
  CHECK(rep.x == b);
  CHECK(rep.method == Method::plu);
}

TEST_CASE("plu_solve exercises the pivot swap") {
  DenseMatrix m(2);
  m.at(0, 0) = 0.0;
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  m.at(1, 1) = 0.0;
  const SolveReport rep = plu_solve(m, std::vector<double>{3, 7});
  CHECK(rep.x == std::vector<double>{7, 3});
}

TEST_CASE("plu_solve roundtrip on preset bands") {
  const PentaToeplitz a(64, 28, 19, 17, 21, 25);
  const std::vector<double> ones(64, 1.0);
  const SolveReport rep = plu_solve(densify(a), matvec(a, ones));
  for (double v : rep.x) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rep.relative_residual <= 1e-12);
}

TEST_CASE("plu_solve rejects a singular matrix") {
  DenseMatrix m(3);  // rank 1
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = 1.0;
  try {
    plu_solve(m, std::vector<double>{1, 1, 1});
    FAIL("expected a SolveError");
  } catch (const SolveError& e) {
    CHECK(e.code() == Errc::singular_matrix);
  }
}

TEST_CASE("banded_lu_solve on the identity returns b") {
  const PentaToeplitz eye(6, 0, 0, 1, 0, 0);
  const std::vector<double> b{1, 2, 3, 4, 5, 6};
  const SolveReport rep = banded_lu_solve(eye, b);
  CHECK(rep.x == b);
  CHECK(rep.method == Method::banded_lu);
}

TEST_CASE("banded_lu_solve roundtrip on preset bands") {
  const PentaToeplitz a(32, 5, 2, 4, 1, 3);
  const std::vector<double> ones(32, 1.0);
  const SolveReport rep = banded_lu_solve(a, matvec(a, ones));
  for (double v : rep.x) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("banded_lu_solve breaks down immediately on a zero main diagonal") {
  const PentaToeplitz a(8, 5, 2, 0, 1, 3);
  try {
    banded_lu_solve(a, std::vector<double>(8, 1.0));
    FAIL("expected a SolveError");
  } catch (const SolveError& e) {
    CHECK(e.code() == Errc::breakdown);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
}

TEST_CASE("the two baselines agree with each other") {
  for (TestId t : {TestId::test1, TestId::test2, TestId::test3}) {
    for (std::size_t n : {6, 13, 32, 64}) {
      const PentaToeplitz a = test_matrix(t, n);
      const std::vector<double> b = random_vector(n, 300 + n);
      const SolveReport plu = plu_solve(densify(a), b);
      const SolveReport banded = banded_lu_solve(a, b);
      CHECK(testsupport::rel_inf_diff(banded.x, plu.x) <= 1e-8);
    }
  }
}

TEST_CASE("banded elimination stays within a factor of the fast solver") {
  // preset 3 is the one whose border products stay normal at this size
  const std::size_t n = 1 << 14;
  const PentaToeplitz a = test_matrix(TestId::test3, n);
  const std::vector<double> b = matvec(a, random_vector(n, 5));
  const auto mean_seconds = [&](auto&& solve) {
    solve();  // warm-up
    const auto t0 = std::chrono::steady_clock::now();
    for (int rep = 0; rep < 20; ++rep) solve();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
               .count() /
           20;
  };
  const double fast_time = mean_seconds([&] { (void)solve_fast(a, b); });
  const double banded_time =
      mean_seconds([&] { (void)banded_lu_solve(a, b); });
  CHECK(banded_time <= 20.0 * fast_time);
}
