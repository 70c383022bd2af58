#include "superdet/detfact.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "superdet/chartab.hpp"
#include "superdet/error.hpp"
#include "superdet/regrep.hpp"
#include "superdet/spectral.hpp"

namespace superdet {

int LinearFactorization::total_degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.multiplicity;
  return d;
}

bool LinearFactorization::invariants_hold(std::size_t order) const {
  if (total_degree() != static_cast<int>(order)) return false;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    if (factors[a].xi.size() != nvars || factors[a].xi.empty() || factors[a].xi[0] != 1.0 ||
        factors[a].multiplicity < 1)
      return false;
    for (std::size_t b = a + 1; b < factors.size(); ++b)
      if (max_abs_diff(factors[a].xi, factors[b].xi) <= kFactorDistinctTol) return false;
  }
  return true;
}

VarMatrix collapsed_matrix(const FiniteGroup& group, const GPartition& partition) {
  const std::size_t n = group.order();
  if (partition.group_order() != n)
    throw Error(ErrorCode::NotAPartition, "partition and group have different orders");
  std::vector<std::size_t> entries(n * n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) entries[g * n + h] = partition.kappa(group.div(g, h));
  return VarMatrix(n, partition.size(), std::move(entries));
}

VarMatrix group_matrix(const FiniteGroup& group) {
  std::vector<std::vector<Element>> singletons;
  for (Element g = 0; g < group.order(); ++g) singletons.push_back({g});
  return collapsed_matrix(group, GPartition::from_parts(group.order(), std::move(singletons)));
}

std::vector<std::string> part_labels(const FiniteGroup& group, const GPartition& partition) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < partition.size(); ++k) out.push_back(group.labels()[partition.rep(k)]);
  return out;
}

LinearFactorization predicted_factorization(const SuperTheory& theory,
                                            std::vector<std::string> labels) {
  LinearFactorization f;
  f.nvars = theory.size();
  f.labels = std::move(labels);
  for (std::size_t j = 0; j < theory.size(); ++j) {
    LinearFactor lf;
    lf.multiplicity = theory.degrees[j];
    lf.xi.resize(theory.size());
    for (std::size_t k = 0; k < theory.size(); ++k)
      lf.xi[k] = theory.basic_chars[j][k] * static_cast<double>(theory.partition.part_size(k)) /
                 static_cast<double>(theory.degrees[j]);
    lf.xi[0] = 1.0;  // chi(1) |{1}| / chi(1)
    f.factors.push_back(std::move(lf));
  }
  for (std::size_t a = 0; a < f.factors.size(); ++a)
    for (std::size_t b = a + 1; b < f.factors.size(); ++b)
      if (max_abs_diff(f.factors[a].xi, f.factors[b].xi) <= kFactorDistinctTol)
        throw Error(ErrorCode::DegenerateFactors,
                    "factors " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  return f;
}

ComplexPoly expand(const LinearFactorization& factorization) {
  ComplexPoly product = ComplexPoly::constant(factorization.nvars, 1.0);
  for (const auto& f : factorization.factors)
    product *= ComplexPoly::linear(f.xi).pow(static_cast<std::uint32_t>(f.multiplicity));
  return product;
}

std::optional<SparsePoly> round_to_integer_poly(const ComplexPoly& p) {
  SparsePoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const double scale = std::max(1.0, std::abs(c));
    const double rounded = std::round(c.real());
    if (std::abs(c.imag()) > kVerifyTol * scale || std::abs(c.real() - rounded) > kVerifyTol * scale)
      return std::nullopt;
    if (rounded != 0.0) out.add_term(e, BigInt(static_cast<long long>(rounded)));
  }
  return out;
}

VerificationReport verify_factorization(const VarMatrix& matrix,
                                        const LinearFactorization& factorization,
                                        const VerifyOptions& options) {
  if (factorization.nvars != matrix.nvars())
    throw Error(ErrorCode::LengthMismatch, "factorization has " +
                                               std::to_string(factorization.nvars) +
                                               " variables, matrix has " +
                                               std::to_string(matrix.nvars()));
  VerificationReport report;
  report.trials = options.trials;
  report.passed = true;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::vector<Complex> x(matrix.nvars());
  for (std::size_t t = 0; t < options.trials; ++t) {
    Complex product;
    for (int attempt = 0;; ++attempt) {
      for (auto& v : x) v = Complex(coord(rng), coord(rng));
      product = 1.0;
      bool small = false;
      for (const auto& f : factorization.factors) {
        Complex value = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) value += f.xi[k] * x[k];
        if (std::abs(value) < kResampleBelow) small = true;
        product *= std::pow(value, f.multiplicity);
      }
      if (!small || attempt > 1000) break;
    }
    const Complex det = det_eval(matrix, x);
    const double err = std::abs(det - product) / std::max(std::abs(product), 1e-300);
    if (err > report.max_rel_error) report.max_rel_error = err;
    if (err > options.tolerance && report.witness.empty()) {
      report.passed = false;
      report.witness = x;
    }
  }

  if (matrix.dim() <= options.symbolic_cap) {
    report.symbolic_checked = true;
    const SparsePoly exact = det_symbolic(matrix, options.symbolic_cap);
    const auto rounded = round_to_integer_poly(expand(factorization));
    report.symbolic_match = rounded && *rounded == exact;
    if (!report.symbolic_match) report.passed = false;
  }
  return report;
}

void require_verified(const VerificationReport& report) {
  if (report.passed) return;
  std::ostringstream msg;
  msg << "determinant does not match the factor product (max relative error "
      << report.max_rel_error << (report.symbolic_checked && !report.symbolic_match
                                      ? ", symbolic expansion differs"
                                      : "")
      << ")";
  if (!report.witness.empty()) {
    msg << " witness x = (";
    for (std::size_t i = 0; i < report.witness.size(); ++i)
      msg << (i ? ", " : "") << report.witness[i].real() << (report.witness[i].imag() < 0 ? "" : "+")
          << report.witness[i].imag() << "i";
    msg << ")";
  }
  throw Error(ErrorCode::IdentityFails, msg.str());
}

std::optional<LinearFactorization> spectral_factorization(const FiniteGroup& group,
                                                          const GPartition& partition,
                                                          const VerifyOptions& options) {
  const ConjClasses classes = conjugacy_classes(group);
  const ClassAlgebra algebra = class_structure_constants(group, classes);
  const auto ops = center_operators(algebra, classes, partition);

  JointSpectrumOptions spectral;
  spectral.seed = options.seed;
  const auto spectrum = joint_spectrum(ops, spectral);

  std::vector<std::vector<Complex>> distinct;
  for (const auto& je : spectrum) {
    bool seen = false;
    for (const auto& d : distinct)
      if (max_abs_diff(d, je.values) <= kFactorDistinctTol) seen = true;
    if (!seen) distinct.push_back(je.values);
  }
  if (distinct.size() != partition.size()) return std::nullopt;

  const double order = static_cast<double>(group.order());
  LinearFactorization f;
  f.nvars = partition.size();
  f.labels = part_labels(group, partition);
  for (auto& xi : distinct) {
    if (std::abs(xi[0] - 1.0) > kMonicTol)
      throw Error(ErrorCode::EigensplitFailed, "joint eigenvalue on the identity part is not 1");
    for (auto& v : xi) v /= xi[0];
    xi[0] = 1.0;
    double norm = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k)
      norm += std::norm(xi[k]) / static_cast<double>(partition.part_size(k));
    const double m = order / norm;
    const double rounded = std::round(m);
    if (std::abs(m - rounded) >= kMultiplicityTol || rounded < 1.0)
      throw Error(ErrorCode::MultiplicityNotIntegral,
                  "multiplicity " + std::to_string(m) + " is not an integer");
    f.factors.push_back({std::move(xi), static_cast<int>(rounded)});
  }
  if (f.total_degree() != static_cast<int>(group.order()))
    throw Error(ErrorCode::MultiplicityNotIntegral,
                "multiplicities sum to " + std::to_string(f.total_degree()) + ", expected " +
                    std::to_string(group.order()));
  std::sort(f.factors.begin(), f.factors.end(), [](const LinearFactor& a, const LinearFactor& b) {
    return rounded_lex_greater(a.xi, b.xi);
  });

  require_verified(verify_factorization(collapsed_matrix(group, partition), f, options));
  return f;
}

ClassFunctionTable recover_characters(const LinearFactorization& factorization,
                                      const GPartition& partition) {
  if (factorization.nvars != partition.size())
    throw Error(ErrorCode::LengthMismatch, "factorization and partition sizes differ");
  ClassFunctionTable out;
  for (const auto& f : factorization.factors) {
    std::vector<Complex> row(partition.size());
    for (std::size_t k = 0; k < partition.size(); ++k)
      row[k] = static_cast<double>(f.multiplicity) * f.xi[k] /
               static_cast<double>(partition.part_size(k));
    if (std::abs(row[0] - static_cast<double>(f.multiplicity)) > kMonicTol)
      throw Error(ErrorCode::DegreeMismatch,
                  "recovered character has value " + std::to_string(row[0].real()) +
                      " at the identity, multiplicity is " + std::to_string(f.multiplicity));
    // <chi, chi> = sum over the block of psi(1)^2 = chi(1)
    double norm = 0.0;
    for (std::size_t k = 0; k < partition.size(); ++k)
      norm += static_cast<double>(partition.part_size(k)) * std::norm(row[k]);
    norm /= static_cast<double>(partition.group_order());
    if (std::abs(norm - f.multiplicity) > kMultiplicityTol * f.multiplicity)
      throw Error(ErrorCode::DegreeMismatch,
                  "recovered character has norm " + std::to_string(norm) + ", degree " +
                      std::to_string(f.multiplicity));
    out.values.push_back(std::move(row));
    out.degrees.push_back(f.multiplicity);
  }
  return out;
}

std::optional<std::vector<std::size_t>> match_factors(const LinearFactorization& a,
                                                      const LinearFactorization& b,
                                                      double radius) {
  if (a.factors.size() != b.factors.size() || a.nvars != b.nvars) return std::nullopt;
  std::vector<std::size_t> perm(a.factors.size());
  std::vector<char> used(b.factors.size(), 0);
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    std::size_t best = b.factors.size();
    double best_dist = radius;
    for (std::size_t j = 0; j < b.factors.size(); ++j) {
      if (used[j] || a.factors[i].multiplicity != b.factors[j].multiplicity) continue;
      double d = max_abs_diff(a.factors[i].xi, b.factors[j].xi);
      if (d <= best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best == b.factors.size()) return std::nullopt;
    used[best] = 1;
    perm[i] = best;
  }
  return perm;
}

}  // namespace superdet
