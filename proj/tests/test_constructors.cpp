#include <doctest.h>

#include <set>

#include "entif/analysis.hpp"
#include "entif/constructors.hpp"
#include "entif/errors.hpp"
#include "entif/exact.hpp"
#include "oracles.hpp"

using namespace entif;

namespace {

mpz_class pow5(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, e);
  return r;
}

void check_entif(const FrameMatrix& a, const mpz_class& lambda, const mpz_class& norm_sq) {
  mpz_class l, n;
  REQUIRE(oracle::is_entif(a, &l, &n));
  CHECK(l == lambda);
  CHECK(n == norm_sq);
  const FrameReport r = analyze(a);
  CHECK(r.is_entif());
  CHECK(*r.tight_value == lambda);
  CHECK(*r.equal_norm_sq == norm_sq);
  // lambda * M == N * norm^2 (trace of A A^T two ways).
  CHECK(lambda * static_cast<unsigned long>(a.dim()) == norm_sq * static_cast<unsigned long>(a.count()));
}

}  // namespace

TEST_CASE("hadjoin") {
  const FrameMatrix i2 = FrameMatrix::identity(2);
  const FrameMatrix two = hadjoin(i2, i2);
  CHECK(two.count() == 4);
  CHECK(*analyze(two).tight_value == 2);
  const Dim5Blocks blocks = dim5_even_blocks(1);
  check_entif(hadjoin(blocks.a, blocks.b), 18, 5);
  CHECK(hadjoin(i2, FrameMatrix(2, 0)) == i2);
  CHECK(hadjoin(FrameMatrix(), i2) == i2);
  CHECK_THROWS_AS(hadjoin(i2, FrameMatrix::identity(3)), DimensionError);
}

TEST_CASE("diag_adjoin") {
  const FrameMatrix a{{3, 4}, {4, -3}};
  check_entif(diag_adjoin(a, a), 25, 25);
  CHECK(diag_adjoin(FrameMatrix{{1}}, FrameMatrix{{1}}) == FrameMatrix::identity(2));
  const FrameReport mixed = analyze(diag_adjoin(a, FrameMatrix{{1, 1}, {1, -1}}));
  CHECK(mixed.is_frame);
  CHECK_FALSE(mixed.is_tight);
  CHECK(mixed.eigen_diagonal == std::vector<mpz_class>{25, 25, 2, 2});
}

TEST_CASE("double_frame") {
  const FrameMatrix t{{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (long c : {1L, -2L, 3L}) {
    const FrameMatrix d = double_frame(t, c);
    CHECK(d.dim() == 6);
    CHECK(d.count() == 8);
    check_entif(d, 2 * c * c * 4, 2 * c * c * 3);
  }
  CHECK_THROWS_AS(double_frame(t, 0), PreconditionError);
}

TEST_CASE("two-dimensional family") {
  CHECK(entif_2d(1) == FrameMatrix{{4, 3}, {3, -4}});
  CHECK(entif_2d(2) == FrameMatrix{{24, 7, 20, 15}, {7, -24, 15, -20}});
  for (std::size_t n = 1; n <= 6; ++n) {
    const FrameMatrix a = entif_2d(n);
    check_entif(a, pow5(2 * n) * static_cast<unsigned long>(n), pow5(2 * n));
    CHECK(spark(a) == 3);
    CHECK(oracle::spark(a) == 3);
  }
  // The representations are pairwise distinct, so no two columns are parallel.
  const auto reps = five_power_reps(5);
  std::set<std::pair<mpz_class, mpz_class>> distinct(reps.begin(), reps.end());
  CHECK(distinct.size() == 5);
}

TEST_CASE("three-dimensional families") {
  CHECK(entif_3d(1, ThreeDimFamily::kThree) == FrameMatrix::identity(3));
  const FrameMatrix t = entif_3d(1, ThreeDimFamily::kFour);
  check_entif(t, 4, 3);
  const FrameReport r = analyze(t);
  CHECK(r.is_equiangular_signed);
  CHECK(*r.angle_value == -1);
  check_entif(entif_3d(2, ThreeDimFamily::kFour), 8, 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    check_entif(entif_3d(n, ThreeDimFamily::kThree), static_cast<unsigned long>(n), 1);
    check_entif(entif_3d(n, ThreeDimFamily::kFour), static_cast<unsigned long>(4 * n), 3);
  }
}

TEST_CASE("Hadamard truncations") {
  check_entif(hadamard_entif(3, 4), 4, 3);
  check_entif(hadamard_entif(5, 8), 8, 5);
  for (std::size_t order : {1u, 2u, 4u, 8u, 12u, 16u})
    for (std::size_t dim = 1; dim <= std::min<std::size_t>(order, 8); ++dim)
      check_entif(hadamard_entif(dim, order), static_cast<unsigned long>(order), static_cast<unsigned long>(dim));
  CHECK_THROWS_AS(hadamard_entif(5, 4), PreconditionError);
  CHECK_THROWS_AS(hadamard_entif(3, 6), UnsupportedOrderError);
}

TEST_CASE("simplex construction") {
  const SimplexResult s3 = simplex_entif(3);
  check_entif(s3.frame, 4, 3);
  CHECK(s3.certificate.simplex_case == SimplexCase::kPerfectSquare);
  const FrameMatrix g = gram(s3.frame);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(g(i, j) == (i == j ? 3 : -1));

  const SimplexResult s1 = simplex_entif(1);
  CHECK(s1.frame.dim() == 1);
  CHECK(abs(s1.frame(0, 0)) == abs(s1.frame(0, 1)));
  CHECK(s1.frame(0, 0) == -s1.frame(0, 1));

  const std::set<std::size_t> impossible{2, 4, 5, 6, 10, 12, 13, 14, 16, 18, 20, 21, 22, 26};
  for (std::size_t dim = 1; dim <= 30; ++dim) {
    CAPTURE(dim);
    if (dim <= 26) CHECK(simplex_feasible(dim).feasible == (impossible.count(dim) == 0));
    if (impossible.count(dim) || !simplex_feasible(dim).feasible) {
      CHECK_THROWS_AS(simplex_entif(dim), InfeasibleError);
      continue;
    }
    const SimplexResult s = simplex_entif(dim);
    const FrameReport r = analyze(s.frame);
    REQUIRE(r.is_entif());
    CHECK(r.is_equiangular_signed);
    CHECK(*r.angle_value < 0);
    // (M + 1) c == M d with c the squared norm and d the tight value.
    CHECK(*r.equal_norm_sq * static_cast<unsigned long>(dim + 1) == *r.tight_value * static_cast<unsigned long>(dim));
    // Exact certificate: S^T S = I / m and S 1 = e_m.
    const auto& c = s.certificate;
    const std::size_t m = dim + 1;
    for (std::size_t i = 0; i < m; ++i) {
      mpq_class row = 0;
      for (std::size_t j = 0; j < m; ++j) row += c.s(i, j);
      CHECK(row == (i + 1 == m ? 1 : 0));
      for (std::size_t j = 0; j < m; ++j) {
        mpq_class dot = 0;
        for (std::size_t k = 0; k < m; ++k) dot += c.s(k, i) * c.s(k, j);
        CHECK(dot == (i == j ? mpq_class(1, static_cast<unsigned long>(m)) : mpq_class(0)));
      }
    }
  }
  try {
    simplex_entif(4);
    FAIL("expected infeasible");
  } catch (const InfeasibleError& e) {
    CHECK(e.citation() == "odd-square-simplex-criterion");
  }
}

TEST_CASE("dimension-five blocks") {
  const Dim5Blocks b1 = dim5_even_blocks(1);
  for (std::size_t j = 0; j < 8; ++j) CHECK(b1.a(0, j) == 1);
  CHECK(b1.a(1, 0) == 2);
  CHECK(b1.a(1, 1) == -2);
  check_entif(b1.a, 8, 5);
  check_entif(b1.b, 10, 5);
  for (long a : {2L, 3L, -1L}) {
    const Dim5Blocks b = dim5_even_blocks(a);
    check_entif(b.a, 8 * a * a, 5 * a * a);
    check_entif(b.b, 10 * a * a, 5 * a * a);
  }
  CHECK_THROWS_AS(dim5_even_blocks(0), PreconditionError);
}

TEST_CASE("gcd adjoin") {
  const Dim5Blocks b = dim5_even_blocks(1);
  for (std::int64_t n = 12; n <= 40; ++n) {
    const FrameMatrix f = gcd_adjoin(b.a, b.b, n);
    CHECK(f.count() == static_cast<std::size_t>(2 * n));
    check_entif(f, static_cast<unsigned long>(2 * n), 5);
  }
  const std::size_t rows[] = {0, 1, 2, 3, 4, 5, 6};
  const FrameMatrix h8 = row_restrict(hadamard(8), rows);
  const FrameMatrix h12 = row_restrict(hadamard(12), rows);
  for (std::int64_t k = 2; k <= 12; ++k) check_entif(gcd_adjoin(h8, h12, k), static_cast<unsigned long>(4 * k), 7);
  CHECK(gcd_adjoin(b.a, b.a, 3) == hadjoin_copies(b.a, 3));
  CHECK_THROWS_AS(gcd_adjoin(b.a, FrameMatrix::identity(5), 20), PreconditionError);
  CHECK_THROWS(gcd_adjoin(b.a, b.b, 3));
}

TEST_CASE("block-square families") {
  CHECK(gensqr(1, 1) == FrameMatrix{{1, 1, 1, -1}, {1, 1, -1, 1}});
  check_entif(gensqr(1, 1), 4, 2);
  check_entif(gensqr(4, 1), 8, 5);
  check_entif(gensqr(2, 2), 16, 9);
  for (int family = 1; family <= 5; ++family)
    for (std::size_t n = 1; n <= 3; ++n)
      for (long b : {1L, 2L}) {
        CAPTURE(family);
        CAPTURE(n);
        const FrameMatrix a = gensqr(family, n, b);
        CHECK(a.dim() == gensqr_dim(family, n));
        CHECK(a.count() == gensqr_count(family, n));
        const mpz_class norm = mpz_class(static_cast<unsigned long>(gensqr_norm_sq(family, n))) * b * b;
        check_entif(a, norm * static_cast<unsigned long>(a.count()) / static_cast<unsigned long>(a.dim()), norm);
      }
  CHECK_THROWS_AS(gensqr(6, 1), PreconditionError);
}

TEST_CASE("equal-norm relaxation") {
  CHECK(equal_norm_any(2, 3) == FrameMatrix{{1, 0, 1}, {0, 1, 0}});
  CHECK(equal_norm_any(4, 4) == FrameMatrix::identity(4));
  const FrameReport r = analyze(equal_norm_any(3, 7));
  CHECK(r.eigen_diagonal == std::vector<mpz_class>{3, 2, 2});
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = m; n <= 12; ++n) {
      const FrameReport q = analyze(equal_norm_any(m, n));
      CHECK(q.is_frame);
      CHECK(*q.equal_norm_sq == 1);
      CHECK(q.is_tight == (n % m == 0));
    }
  CHECK_THROWS_AS(equal_norm_any(3, 2), PreconditionError);
}

TEST_CASE("tight relaxation") {
  const FrameMatrix a = tight_any(2, 3, mpz_class(5));
  CHECK(a == FrameMatrix{{3, 4, 0}, {0, 0, 5}});
  CHECK(analyze(a).column_norms_sq == std::vector<mpz_class>{9, 16, 25});
  const FrameReport five = analyze(tight_any(3, 5));
  CHECK(five.is_tight);
  CHECK_FALSE(five.is_equal_norm);
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = m; n <= 12; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const FrameMatrix t = tight_any(m, n);
      const FrameReport r = analyze(t);
      REQUIRE(r.is_tight);
      // tight value is p^2, a perfect square
      CHECK(mpz_perfect_square_p(r.tight_value->get_mpz_t()));
      CHECK(frame_operator(t) == oracle::aat(t));
      for (std::size_t j = 0; j < n; ++j) CHECK(r.column_norms_sq[j] > 0);
    }
  CHECK_THROWS_AS(tight_any(3, 2), PreconditionError);
  CHECK_THROWS_AS(tight_any(2, 3, mpz_class(3)), InfeasibleError);
}

TEST_CASE("almost tight frames") {
  struct Case {
    std::size_t m, n;
    double eps;
  };
  for (const Case c : {Case{2, 4, 0.5}, Case{3, 5, 0.1}, Case{2, 3, 0.2}, Case{3, 3, 0.1}}) {
    CAPTURE(c.m);
    CAPTURE(c.n);
    AlmostTightRequest req;
    req.dim = c.m;
    req.count = c.n;
    req.epsilon = c.eps;
    req.seed = 42;
    const AlmostTightResult r = almost_tight(req);
    CHECK(r.frame.dim() == c.m);
    CHECK(r.frame.count() == c.n);
    CHECK(oracle::spark(r.frame) == c.m + 1);
    const FrameReport rep = analyze(r.frame);
    REQUIRE(rep.is_equal_norm);
    CHECK(*rep.equal_norm_sq == r.scale * r.scale);
    const double ratio = static_cast<double>(c.n) / static_cast<double>(c.m);
    CHECK(r.lower >= (1 - c.eps) * ratio - r.certified_error);
    CHECK(r.upper <= (1 + c.eps) * ratio + r.certified_error);
    // Same request, same frame.
    CHECK(almost_tight(req).frame == r.frame);
  }
  AlmostTightRequest tiny{3, 5, 0.01, 0, mpz_class(4)};
  CHECK_THROWS_AS(almost_tight(tiny), BudgetError);
  CHECK_THROWS_AS(almost_tight({3, 2, 0.1, 0, mpz_class(100)}), PreconditionError);
  CHECK_THROWS_AS(almost_tight({3, 5, 1.5, 0, mpz_class(100)}), PreconditionError);
}
