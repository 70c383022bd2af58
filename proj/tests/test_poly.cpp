#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "superdet/detfact.hpp"
#include "superdet/error.hpp"
#include "superdet/poly.hpp"

using namespace superdet;

namespace {

std::vector<Complex> gaussian_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Complex> x(n);
  for (auto& v : x) v = Complex(d(rng), d(rng));
  return x;
}

}  // namespace

TEST_CASE("arithmetic") {
  auto x = SparsePoly::variable(2, 0);
  auto y = SparsePoly::variable(2, 1);
  auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(p.term_count() == 2);
  CHECK((p - p).is_zero());
  CHECK((x + y).pow(3).coefficient({2, 1}) == 3);
  auto q = x.pow(4) + SparsePoly::constant(2, 7);
  CHECK_FALSE(q.is_homogeneous());
  CHECK((p * q).degree() == p.degree() + q.degree());
  CHECK_THROWS_AS(x + SparsePoly::variable(3, 0), Error);
}

TEST_CASE("big coefficients stay exact") {
  auto x = SparsePoly::variable(1, 0);
  auto p = (x + SparsePoly::constant(1, 1)).pow(80);
  CHECK(p.coefficient({40}) == BigInt("107507208733336176461620"));
}

TEST_CASE("grlex printing and parsing") {
  std::vector<std::string> labels = {"1", "a", "a2"};
  auto x = [&](std::size_t i) { return SparsePoly::variable(3, i); };
  auto p = x(0).pow(3) + x(1).pow(3) + x(2).pow(3) -
           SparsePoly::constant(3, 3) * x(0) * x(1) * x(2);
  CHECK(to_string(p, labels) == "x1^3 - 3*x1*xa*xa2 + xa^3 + xa2^3");
  CHECK(parse_poly("x1^3 + xa^3 + xa2^3 - 3*x1*xa*xa2", labels) == p);
  CHECK(parse_poly(to_string(p, labels), labels) == p);
  CHECK(to_string(SparsePoly(2)) == "0");
  CHECK(to_string(x(0) * x(0) - x(1) * x(1)) == "x0^2 - x1^2");
  CHECK_THROWS_AS(parse_poly("x1^2 + xq", labels), Error);
}

TEST_CASE("evaluation") {
  std::vector<std::string> labels = {"1", "g"};
  auto p = parse_poly("x1^2 - xg^2", labels);
  std::vector<Complex> pt = {3.0, 2.0};
  CHECK(eval_complex(p, pt) == Complex(5.0));
  CHECK(eval_complex(SparsePoly(2), pt) == Complex(0.0));
  std::vector<Complex> short_pt = {1.0};
  CHECK_THROWS_AS(eval_complex(p, short_pt), Error);
  CHECK(eval_complex(to_complex(p), pt) == Complex(5.0));
}

TEST_CASE("symbolic determinants") {
  CHECK(det_symbolic(VarMatrix(1, 1, {0})) == SparsePoly::variable(1, 0));

  std::vector<std::string> c2 = {"1", "g"};
  auto g2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, c2);
  CHECK(to_string(det_symbolic(group_matrix(g2)), c2) == "x1^2 - xg^2");

  auto g3 = fixtures::group("C3");
  auto d3 = det_symbolic(group_matrix(g3));
  // frozen from the sympy cofactor oracle: x0**3 - 3*x0*x1*x2 + x1**3 + x2**3
  CHECK(d3 == parse_poly("x1^3 + xa^3 + xa2^3 - 3*x1*xa*xa2", g3.labels()));
  std::vector<Complex> ones = {1.0, 1.0, 1.0};
  CHECK(std::abs(eval_complex(d3, ones)) == 0.0);

  CHECK_THROWS_AS(det_symbolic(group_matrix(fixtures::group("C3xC3"))), Error);
  try {
    det_symbolic(group_matrix(fixtures::group("C3xC3")));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimTooLargeForSymbolic);
  }
}

TEST_CASE("polynomial-entry determinant") {
  auto x = SparsePoly::variable(2, 0);
  auto y = SparsePoly::variable(2, 1);
  SparsePoly zero(2);
  std::vector<std::vector<SparsePoly>> m = {{x, y + y}, {y, x + y}};
  CHECK(det_symbolic(m, 2) == (x + y + y) * (x - y));
  std::vector<std::vector<SparsePoly>> sparse = {{x, zero, zero}, {zero, y, zero}, {zero, zero, x}};
  CHECK(det_symbolic(sparse, 2) == x * x * y);
}

TEST_CASE("numeric determinants") {
  std::vector<std::string> c2 = {"1", "g"};
  auto m2 = group_matrix(FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, c2));
  std::vector<Complex> e = {1.0, 0.0};
  CHECK(det_eval(m2, e) == Complex(1.0));
  std::vector<Complex> fractional = {0.5, 0.25};
  CHECK(std::abs(det_eval(m2, fractional) - Complex(0.1875)) < 1e-15);

  for (const char* name : {"C4", "S3", "Q8", "A4"}) {
    auto g = fixtures::group(name);
    auto m = collapsed_matrix(g, GPartition::maximal(g.order()));
    std::vector<Complex> ones = {1.0, 1.0};
    CHECK(std::abs(det_eval(m, ones)) < 1e-9);
  }
  std::vector<Complex> dense = {2.0, 1.0, 1.0, 3.0};
  CHECK(std::abs(det_dense(dense, 2) - Complex(5.0)) < 1e-12);
  std::vector<Complex> singular = {1.0, 2.0, 2.0, 4.0};
  CHECK(std::abs(det_dense(singular, 2)) < 1e-12);
}

TEST_CASE("group matrices have a constant profile, x_1 diagonal, monic determinant") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    auto g = fixtures::group(f);
    auto m = group_matrix(g);
    CHECK(m.has_constant_profile());
    for (std::size_t i = 0; i < m.dim(); ++i) CHECK(m.at(i, i) == 0);
    if (g.order() > kDefaultSymbolicCap) continue;
    auto det = det_symbolic(m);
    CHECK(det.is_homogeneous());
    CHECK(det.degree() == g.order());
    Exponents lead(g.order(), 0);
    lead[0] = static_cast<std::uint32_t>(g.order());
    CHECK(det.coefficient(lead) == 1);
  }
}

TEST_CASE("evaluation and symbolic routes agree at 30 Gaussian points") {
  std::mt19937_64 rng(2024);
  for (const auto& f : fixtures::all()) {
    if (f.order > 8) continue;
    CAPTURE(f.name);
    auto m = group_matrix(fixtures::group(f));
    auto det = det_symbolic(m);
    for (int t = 0; t < 30; ++t) {
      auto x = gaussian_point(rng, m.nvars());
      Complex exact = eval_complex(det, x);
      Complex numeric = det_eval(m, x);
      CHECK(std::abs(exact - numeric) <= 1e-10 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("collapsed order-6 determinant matches the oracle product") {
  auto g = fixtures::group("S3");
  auto classes = conjugacy_classes(g);
  auto p = GPartition::fine(classes);
  auto det = det_symbolic(collapsed_matrix(g, p));
  // parts are (identity, 3-cycles, transpositions); oracle variables are
  // (identity, transpositions, 3-cycles)
  REQUIRE(p.part_size(1) == 2);
  REQUIRE(p.part_size(2) == 3);
  auto x1 = SparsePoly::variable(3, 0);
  auto x3 = SparsePoly::variable(3, 1);
  auto x2 = SparsePoly::variable(3, 2);
  auto c = [](int v) { return SparsePoly::constant(3, v); };
  auto expected = (x1 + c(3) * x2 + c(2) * x3) * (x1 - c(3) * x2 + c(2) * x3) * (x1 - x3).pow(4);
  CHECK(det == expected);
}
