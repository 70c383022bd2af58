#include "superdet/regrep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "superdet/detfact.hpp"
#include "superdet/error.hpp"
#include "superdet/spectral.hpp"

namespace superdet {

RegularRep regular_rep(const FiniteGroup& group, const GPartition& partition) {
  auto constants = part_structure_constants(group, partition);
  if (!constants)
    throw Error(ErrorCode::NotClosed, "some product of part sums is not constant on parts");
  const std::size_t n = partition.size();
  RegularRep rep;
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*constants)(i, j, k);
    rep.matrices.push_back(std::move(a));
    rep.part_sizes.push_back(partition.part_size(k));
  }
  return rep;
}

bool rep_invariants_hold(const RegularRep& rep) {
  const std::size_t n = rep.size();
  const auto dim = static_cast<Eigen::Index>(n);
  if (n == 0 || rep.matrices[0] != IntMatrix::Identity(dim, dim)) return false;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (rep.matrices[j] * rep.matrices[k] != rep.matrices[k] * rep.matrices[j]) return false;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < n; ++i)
        total += rep.matrices[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                 static_cast<std::int64_t>(rep.part_sizes[i]);
      if (total != static_cast<std::int64_t>(rep.part_sizes[j] * rep.part_sizes[k])) return false;
    }
  return true;
}

std::vector<Eigen::MatrixXd> center_operators(const ClassAlgebra& algebra,
                                              const ConjClasses& classes,
                                              const GPartition& partition) {
  if (!is_invariant_partition(classes, partition))
    throw Error(ErrorCode::PartNotInvariant, "partition is not G-invariant with {1} alone");
  const auto nc = static_cast<Eigen::Index>(algebra.nclasses());
  std::vector<Eigen::MatrixXd> ops(partition.size(), Eigen::MatrixXd::Zero(nc, nc));
  for (std::size_t c = 0; c < classes.count(); ++c)
    ops[partition.kappa(classes.classes[c].front())] += algebra.multiplication_matrix(c);
  return ops;
}

double quadratic_residual(const RegularRep& rep, const std::vector<Complex>& r) {
  const std::size_t n = rep.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Complex rhs = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        rhs += static_cast<double>(
                   rep.matrices[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) *
               r[i];
      worst = std::max(worst, std::abs(r[j] * r[k] - rhs));
    }
  return worst;
}

std::vector<std::vector<Complex>> eigen_solutions(const RegularRep& rep, std::uint64_t seed) {
  std::vector<Eigen::MatrixXd> ops;
  for (const auto& a : rep.matrices) ops.push_back(a.cast<double>());
  JointSpectrumOptions options;
  options.seed = seed;
  const auto spectrum = joint_spectrum(ops, options);
  std::vector<std::vector<Complex>> out;
  for (const auto& je : spectrum) {
    auto r = je.values;
    if (quadratic_residual(rep, r) >= kQuadraticTol)
      throw Error(ErrorCode::EigensplitFailed, "joint eigenvalue violates the quadratic relation");
    for (std::size_t m = 0; m < je.multiplicity; ++m) out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return rounded_lex_greater(a, b); });
  return out;
}

namespace {

std::vector<std::vector<Complex>> theory_factors(const SuperTheory& t) {
  std::vector<std::vector<Complex>> factors;
  for (std::size_t j = 0; j < t.size(); ++j) {
    std::vector<Complex> xi(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
      xi[k] = t.basic_chars[j][k] * static_cast<double>(t.partition.part_size(k)) /
              static_cast<double>(t.degrees[j]);
    factors.push_back(std::move(xi));
  }
  return factors;
}

}  // namespace

RegularDetReport verify_regular_determinant(const RegularRep& rep, const SuperTheory& theory,
                                            std::uint64_t seed, std::size_t trials) {
  const std::size_t n = rep.size();
  if (n != theory.size())
    throw Error(ErrorCode::LengthMismatch, "representation and theory have different sizes");
  const auto factors = theory_factors(theory);
  RegularDetReport report;

  if (n <= kRegularDetSymbolicCap) {
    report.symbolic = true;
    std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n, SparsePoly(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          auto a = rep.matrices[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          if (a != 0) m[i][j] += SparsePoly::variable(n, k, BigInt(a));
        }
    const ComplexPoly det = to_complex(det_symbolic(m, n, kRegularDetSymbolicCap));
    ComplexPoly product = ComplexPoly::constant(n, 1.0);
    for (const auto& xi : factors) product *= ComplexPoly::linear(xi);
    // Compare over the union of supports.
    ComplexPoly diff = det - product;
    for (const auto& [e, c] : diff.terms()) {
      Complex ref = product.coefficient(e);
      report.max_error = std::max(report.max_error, std::abs(c) / std::max(1.0, std::abs(ref)));
    }
    report.passed = report.max_error <= 1e-8;
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-5, 5);
  report.trials = trials;
  report.passed = true;
  std::vector<Complex> x(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Complex prod;
    for (int attempt = 0;; ++attempt) {
      for (auto& v : x) v = Complex(coord(rng), coord(rng));
      prod = 1.0;
      bool small = false;
      for (const auto& xi : factors) {
        Complex f = 0.0;
        for (std::size_t k = 0; k < n; ++k) f += xi[k] * x[k];
        small = small || std::abs(f) < kResampleBelow;
        prod *= f;
      }
      if (!small || attempt > 1000) break;
    }
    std::vector<Complex> dense(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          dense[i * n + j] += static_cast<double>(rep.matrices[k](static_cast<Eigen::Index>(i),
                                                                  static_cast<Eigen::Index>(j))) *
                              x[k];
    const Complex det = det_dense(dense, n);
    double err = std::abs(det - prod) / std::max(std::abs(prod), 1e-300);
    if (std::abs(prod) == 0.0) err = std::abs(det);
    if (err > report.max_error) {
      report.max_error = err;
      if (err > 1e-6) {
        report.passed = false;
        report.witness = x;
      }
    }
  }
  return report;
}

void require_regular_determinant(const RegularDetReport& report) {
  if (report.passed) return;
  std::ostringstream msg;
  msg << "det(sum A_k x_k) differs from the factor product (max error " << report.max_error << ")";
  if (!report.witness.empty()) {
    msg << " at x = (";
    for (std::size_t i = 0; i < report.witness.size(); ++i)
      msg << (i ? ", " : "") << report.witness[i].real() << "+" << report.witness[i].imag() << "i";
    msg << ")";
  }
  throw Error(ErrorCode::IdentityFails, msg.str());
}

}  // namespace superdet
