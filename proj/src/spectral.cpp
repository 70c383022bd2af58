#include "superdet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace superdet {

namespace {

constexpr double kClusterTol = 1e-6;
constexpr double kResidualTol = 1e-8;
constexpr double kAgreementTol = 1e-7;

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
}

std::int64_t grid(double v) { return std::llround(v * 1e6); }

// Returns an empty vector when this combination did not split cleanly.
std::vector<JointEigenvalue> try_split(std::span<const Eigen::MatrixXd> ops,
                                       const Eigen::VectorXd& weights, bool require_simple) {
  const Eigen::Index n = ops.front().rows();
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < ops.size(); ++k) combo += weights[static_cast<Eigen::Index>(k)] * ops[k];
  const double scale = std::max(1.0, combo.norm());
  const Eigen::MatrixXcd b = combo.cast<Complex>();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(b, false);
  if (solver.info() != Eigen::Success) return {};
  std::vector<Complex> lambdas(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  // Greedy clustering against running cluster means.
  std::vector<std::vector<Complex>> clusters;
  for (Complex l : lambdas) {
    bool placed = false;
    for (auto& c : clusters) {
      Complex mean = 0.0;
      for (Complex x : c) mean += x;
      mean /= static_cast<double>(c.size());
      if (std::abs(l - mean) <= kClusterTol * scale) {
        c.push_back(l);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({l});
  }

  std::vector<double> op_scale;
  for (const auto& op : ops) op_scale.push_back(std::max(1.0, op.norm()));

  std::vector<JointEigenvalue> out;
  for (const auto& c : clusters) {
    const auto m = static_cast<Eigen::Index>(c.size());
    if (require_simple && m != 1) return {};
    Complex mean = 0.0;
    for (Complex x : c) mean += x;
    mean /= static_cast<double>(m);

    Eigen::MatrixXcd shifted = b - mean * Eigen::MatrixXcd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv[n - m] > kClusterTol * scale * 10) return {};
    if (n - m - 1 >= 0 && sv[n - m - 1] <= kClusterTol * scale) return {};

    JointEigenvalue je;
    je.multiplicity = static_cast<std::size_t>(m);
    je.values.assign(ops.size(), 0.0);
    for (Eigen::Index col = n - m; col < n; ++col) {
      Eigen::VectorXcd v = svd.matrixV().col(col);
      v.normalize();
      for (std::size_t k = 0; k < ops.size(); ++k) {
        Eigen::VectorXcd av = ops[k].cast<Complex>() * v;
        Complex xi = v.dot(av);  // conjugates v
        if ((av - xi * v).norm() > kResidualTol * op_scale[k]) return {};
        if (col == n - m)
          je.values[k] = xi;
        else if (std::abs(je.values[k] - xi) > kAgreementTol * op_scale[k])
          return {};
      }
    }
    out.push_back(std::move(je));
  }
  std::size_t total = 0;
  for (const auto& je : out) total += je.multiplicity;
  if (total != static_cast<std::size_t>(n)) return {};
  return out;
}

}  // namespace

std::vector<JointEigenvalue> joint_spectrum(std::span<const Eigen::MatrixXd> ops,
                                            const JointSpectrumOptions& options) {
  if (ops.empty()) throw Error(ErrorCode::InvalidInput, "empty operator family");
  const Eigen::Index n = ops.front().rows();
  for (const auto& op : ops)
    if (op.rows() != n || op.cols() != n)
      throw Error(ErrorCode::LengthMismatch, "operators must be square and of equal size");

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::mt19937_64 rng(attempt_seed(options.seed, attempt));
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    Eigen::VectorXd weights(static_cast<Eigen::Index>(ops.size()));
    for (Eigen::Index k = 0; k < weights.size(); ++k) weights[k] = coeff(rng);
    auto result = try_split(ops, weights, options.require_simple);
    if (!result.empty()) return result;
  }
  throw Error(ErrorCode::EigensplitFailed, "no clean eigensplit after " +
                                               std::to_string(options.max_attempts) +
                                               " random combinations");
}

bool rounded_lex_greater(std::span<const Complex> a, std::span<const Complex> b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto ar = grid(a[i].real()), br = grid(b[i].real());
    if (ar != br) return ar > br;
    auto ai = grid(a[i].imag()), bi = grid(b[i].imag());
    if (ai != bi) return ai > bi;
  }
  return a.size() > b.size();
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::norm(a[i] - b[i]));
  return std::sqrt(d);
}

}  // namespace superdet
