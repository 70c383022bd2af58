#include "superdet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <Eigen/Dense>

namespace superdet {

bool GrlexFirst::operator()(const Exponents& a, const Exponents& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

namespace {

std::string var_name(std::size_t i, std::span<const std::string> labels) {
  return "x" + (labels.empty() ? std::to_string(i) : labels[i]);
}

std::string monomial_text(const Exponents& e, std::span<const std::string> labels) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(i, labels);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

template <class Poly>
Complex eval_impl(const Poly& p, std::span<const Complex> point) {
  if (point.size() != p.nvars())
    throw Error(ErrorCode::LengthMismatch, "point has " + std::to_string(point.size()) +
                                               " coordinates, polynomial has " +
                                               std::to_string(p.nvars()) + " variables");
  Complex sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    Complex term;
    if constexpr (std::is_same_v<Poly, SparsePoly>)
      term = Complex(c.template convert_to<double>(), 0.0);
    else
      term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

}  // namespace

std::string to_string(const SparsePoly& p, std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != p.nvars())
    throw Error(ErrorCode::LengthMismatch, "label table size does not match variable count");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = monomial_text(e, labels);
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

SparsePoly parse_poly(std::string_view text, std::span<const std::string> labels) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace("x" + labels[i], i);
  const std::size_t nvars = labels.size();
  SparsePoly out(nvars);

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::InvalidInput,
                "polynomial parse error at position " + std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() {
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    return BigInt(digits);
  };

  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    Exponents e(nvars, 0);
    bool have_factor = false;
    for (;;) {
      skip();
      if (pos >= text.size()) break;
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= read_int();
      } else if (text[pos] == 'x') {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '*' && text[pos] != '^' && text[pos] != '+' &&
               text[pos] != '-' && !std::isspace(static_cast<unsigned char>(text[pos])))
          ++pos;
        auto it = index.find(std::string(text.substr(start, pos - start)));
        if (it == index.end()) fail("unknown variable " + std::string(text.substr(start, pos - start)));
        std::uint32_t power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          power = static_cast<std::uint32_t>(read_int());
        }
        e[it->second] += power;
      } else {
        fail("unexpected character");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    out.add_term(std::move(e), sign * coeff);
  }
  return out;
}

Complex eval_complex(const SparsePoly& p, std::span<const Complex> point) {
  return eval_impl(p, point);
}

Complex eval_complex(const ComplexPoly& p, std::span<const Complex> point) {
  return eval_impl(p, point);
}

ComplexPoly to_complex(const SparsePoly& p) {
  ComplexPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, Complex(c.convert_to<double>(), 0.0));
  return out;
}

VarMatrix::VarMatrix(std::size_t dim, std::size_t nvars, std::vector<std::size_t> entries)
    : dim_(dim), nvars_(nvars), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_)
    throw Error(ErrorCode::LengthMismatch, "VarMatrix entry count");
  for (std::size_t v : entries_)
    if (v >= nvars_) throw Error(ErrorCode::InvalidInput, "variable index out of range");
}

bool VarMatrix::has_constant_profile() const {
  if (dim_ == 0) return true;
  for (std::size_t i = 0; i < dim_; ++i)
    if (at(i, i) != at(0, 0)) return false;
  std::vector<std::size_t> reference(nvars_, 0);
  for (std::size_t j = 0; j < dim_; ++j) ++reference[at(0, j)];
  std::vector<std::size_t> row(nvars_), col(nvars_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::fill(row.begin(), row.end(), 0);
    std::fill(col.begin(), col.end(), 0);
    for (std::size_t j = 0; j < dim_; ++j) {
      ++row[at(i, j)];
      ++col[at(j, i)];
    }
    if (row != reference || col != reference) return false;
  }
  return true;
}

SparsePoly det_symbolic(const VarMatrix& m, std::size_t cap) {
  const std::size_t n = m.dim();
  if (n > cap)
    throw Error(ErrorCode::DimTooLargeForSymbolic,
                "dimension " + std::to_string(n) + " exceeds symbolic cap " + std::to_string(cap));
  std::map<Exponents, std::int64_t> acc;
  Exponents e(m.nvars(), 0);
  std::vector<char> used(n, 0);

  // Row-by-row Leibniz expansion; the sign flips once per used column to the
  // right of the chosen one.
  auto expand = [&](auto&& self, std::size_t row, int sign) -> void {
    if (row == n) {
      acc[e] += sign;
      return;
    }
    int larger_used = 0;
    for (std::size_t j = n; j-- > 0;) {
      if (used[j]) {
        ++larger_used;
        continue;
      }
      used[j] = 1;
      ++e[m.at(row, j)];
      self(self, row + 1, (larger_used % 2) ? -sign : sign);
      --e[m.at(row, j)];
      used[j] = 0;
    }
  };
  expand(expand, 0, 1);

  SparsePoly out(m.nvars());
  for (auto& [exps, c] : acc)
    if (c != 0) out.add_term(exps, BigInt(c));
  return out;
}

SparsePoly det_symbolic(const std::vector<std::vector<SparsePoly>>& m, std::size_t nvars,
                        std::size_t cap) {
  const std::size_t n = m.size();
  if (n > cap)
    throw Error(ErrorCode::DimTooLargeForSymbolic,
                "dimension " + std::to_string(n) + " exceeds symbolic cap " + std::to_string(cap));
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::LengthMismatch, "matrix is not square");
  SparsePoly out(nvars);
  std::vector<char> used(n, 0);
  auto expand = [&](auto&& self, std::size_t row, int sign, const SparsePoly& partial) -> void {
    if (row == n) {
      if (sign > 0)
        out += partial;
      else
        out -= partial;
      return;
    }
    int larger_used = 0;
    for (std::size_t j = n; j-- > 0;) {
      if (used[j]) {
        ++larger_used;
        continue;
      }
      if (m[row][j].is_zero()) continue;
      used[j] = 1;
      self(self, row + 1, (larger_used % 2) ? -sign : sign, partial * m[row][j]);
      used[j] = 0;
    }
  };
  expand(expand, 0, 1, SparsePoly::constant(nvars, 1));
  return out;
}

Complex det_dense(std::span<const Complex> row_major, std::size_t dim) {
  if (row_major.size() != dim * dim) throw Error(ErrorCode::LengthMismatch, "dense matrix size");
  if (dim == 0) return 1.0;
  Eigen::MatrixXcd a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * dim + j];
  return a.partialPivLu().determinant();
}

namespace {

struct GaussInt {
  BigInt re, im;

  bool is_zero() const { return re == 0 && im == 0; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  // Caller guarantees b divides a.
  friend GaussInt operator/(const GaussInt& a, const GaussInt& b) {
    const BigInt norm = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
  }
};

constexpr double kExactCoordinateMax = 1e6;

bool gaussian_integer(Complex z) {
  return z.real() == std::trunc(z.real()) && z.imag() == std::trunc(z.imag()) &&
         std::abs(z.real()) <= kExactCoordinateMax && std::abs(z.imag()) <= kExactCoordinateMax;
}

// Fraction-free (Bareiss) elimination; every division is exact in Z[i].
Complex det_bareiss(std::vector<GaussInt> a, std::size_t n) {
  GaussInt prev{1, 0};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k].is_zero()) ++r;
      if (r == n) return 0.0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = GaussInt{0, 0};
    }
    prev = a[k * n + k];
  }
  const GaussInt& d = a[n * n - 1];
  Complex out(d.re.convert_to<double>(), d.im.convert_to<double>());
  return negate ? -out : out;
}

}  // namespace

Complex det_eval(const VarMatrix& m, std::span<const Complex> point) {
  if (point.size() != m.nvars())
    throw Error(ErrorCode::LengthMismatch, "point has " + std::to_string(point.size()) +
                                               " coordinates, matrix has " +
                                               std::to_string(m.nvars()) + " variables");
  const std::size_t n = m.dim();
  if (n > 0 && std::all_of(point.begin(), point.end(), gaussian_integer)) {
    std::vector<GaussInt> exact(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Complex z = point[m.at(i, j)];
        exact[i * n + j] = {BigInt(static_cast<long long>(z.real())),
                            BigInt(static_cast<long long>(z.imag()))};
      }
    return det_bareiss(std::move(exact), n);
  }
  std::vector<Complex> dense(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = point[m.at(i, j)];
  return det_dense(dense, n);
}

}  // namespace superdet
