#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclic_inversion.hpp"
#include "fixtures.hpp"
#include "superdet/detfact.hpp"
#include "superdet/error.hpp"
#include "superdet/regrep.hpp"

using namespace superdet;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (auto v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("regular representation examples") {
  auto c3 = fixtures::group("C3");
  auto r3 = regular_rep(c3, GPartition::maximal(3));
  REQUIRE(r3.size() == 2);
  CHECK(r3.matrices[0] == IntMatrix::Identity(2, 2));
  CHECK(r3.matrices[1] == int_matrix({{0, 2}, {1, 1}}));

  auto c4 = fixtures::group("C4");
  auto r4 = regular_rep(c4, cyclic_inversion::partition(4));
  REQUIRE(r4.size() == 3);
  CHECK(r4.matrices[2] == int_matrix({{0, 0, 2}, {0, 0, 2}, {1, 1, 0}}));
  CHECK(r4.part_sizes == std::vector<std::size_t>{1, 1, 2});

  try {
    regular_rep(c4, GPartition::from_parts(4, {{0}, {1, 2}, {3}}));
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }
}

TEST_CASE("eigen solutions") {
  auto c3 = fixtures::group("C3");
  auto sol = eigen_solutions(regular_rep(c3, GPartition::maximal(3)));
  REQUIRE(sol.size() == 2);
  CHECK(std::abs(sol[0][1] - Complex(2.0)) < 1e-9);
  CHECK(std::abs(sol[1][1] - Complex(-1.0)) < 1e-9);

  auto s3 = fixtures::group("S3");
  auto t = character_table(s3);
  auto fine = eigen_solutions(regular_rep(s3, GPartition::fine(t.classes)));
  REQUIRE(fine.size() == 3);
  for (const auto& r : fine) {
    bool matched = false;
    for (std::size_t psi = 0; psi < t.size(); ++psi) {
      bool ok = true;
      for (std::size_t k = 0; k < 3; ++k)
        ok = ok && std::abs(r[k] - omega(t, psi, t.classes.classes[k])) < 1e-8;
      matched = matched || ok;
    }
    CHECK(matched);
  }
}

TEST_CASE("determinant of the regular representation") {
  auto c3 = fixtures::group("C3");
  auto max3 = build_theory(character_table(c3), GPartition::maximal(3));
  auto report = verify_regular_determinant(regular_rep(c3, max3.partition), max3);
  CHECK(report.passed);
  CHECK(report.symbolic);
  CHECK(report.max_error <= 1e-8);

  std::vector<std::string> labels = {"1", "g"};
  auto c2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, labels);
  auto t2 = character_table(c2);
  auto fine2 = build_theory(t2, GPartition::fine(t2.classes));
  CHECK(verify_regular_determinant(regular_rep(c2, fine2.partition), fine2).passed);

  auto c4 = fixtures::group("C4");
  auto inv = build_theory(character_table(c4), cyclic_inversion::partition(4));
  auto rep = regular_rep(c4, inv.partition);
  CHECK(verify_regular_determinant(rep, inv).passed);

  auto broken = inv;
  broken.basic_chars[1][1] += 0.5;
  auto bad = verify_regular_determinant(rep, broken);
  CHECK_FALSE(bad.passed);
  try {
    require_regular_determinant(bad);
    FAIL("expected IdentityFails");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityFails);
  }

  // more than six parts goes through random evaluation
  auto c8 = fixtures::group("C8");
  auto t8 = character_table(c8);
  auto fine8 = build_theory(t8, GPartition::fine(t8.classes));
  auto r8 = verify_regular_determinant(regular_rep(c8, fine8.partition), fine8);
  CHECK(r8.passed);
  CHECK_FALSE(r8.symbolic);
  CHECK(r8.trials == 20);
}

TEST_CASE("every enumerated theory: rep invariants, quadratic relation, both spectra agree") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    auto g = fixtures::group(f);
    auto t = character_table(g);
    for (const auto& th : enumerate_theories(g, t).theories) {
      auto rep = regular_rep(g, th.partition);
      CHECK(rep_invariants_hold(rep));
      const std::size_t n = rep.size();
      // det(sum A_k x_k) at x = (1, 0, ..., 0) is det(A_0) = 1
      CHECK(rep.matrices[0] == IntMatrix::Identity(static_cast<Eigen::Index>(n),
                                                   static_cast<Eigen::Index>(n)));

      auto sol = eigen_solutions(rep);
      CHECK(sol.size() == n);
      for (const auto& r : sol) CHECK(quadratic_residual(rep, r) < 1e-7);

      auto sf = spectral_factorization(g, th.partition);
      REQUIRE(sf);
      LinearFactorization from_rep;
      from_rep.nvars = n;
      for (const auto& r : sol) from_rep.factors.push_back({r, 0});
      LinearFactorization unweighted = *sf;
      for (auto& fac : unweighted.factors) fac.multiplicity = 0;
      CHECK(match_factors(from_rep, unweighted, 1e-6).has_value());

      auto report = verify_regular_determinant(rep, th);
      CHECK(report.passed);
      CHECK(report.symbolic == (n <= kRegularDetSymbolicCap));
    }
  }
}
