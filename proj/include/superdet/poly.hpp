#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superdet/error.hpp"

namespace superdet {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;
using Exponents = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultSymbolicCap = 8;

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// go to the larger exponent on the earliest variable.
struct GrlexFirst {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint32_t total_degree(const Exponents& e);

/// Sparse multivariate polynomial. Zero coefficients are never stored.
template <class Coeff>
class BasicPoly {
 public:
  using Terms = std::map<Exponents, Coeff, GrlexFirst>;

  explicit BasicPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static BasicPoly constant(std::size_t nvars, const Coeff& c) {
    BasicPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static BasicPoly variable(std::size_t nvars, std::size_t index, const Coeff& c = Coeff(1)) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    BasicPoly p(nvars);
    p.add_term(std::move(e), c);
    return p;
  }
  /// Sum of coeffs[i] * x_i.
  static BasicPoly linear(std::span<const Coeff> coeffs) {
    BasicPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(std::move(e), coeffs[i]);
    }
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(Exponents e, const Coeff& c) {
    if (e.size() != nvars_) throw Error(ErrorCode::LengthMismatch, "exponent vector length");
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  std::uint32_t degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != degree()) return false;
    return true;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    BasicPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  BasicPoly pow(std::uint32_t k) const {
    BasicPoly result = constant(nvars_, Coeff(1));
    BasicPoly base = *this;
    while (k) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const BasicPoly& o) const {
    if (o.nvars_ != nvars_)
      throw Error(ErrorCode::LengthMismatch, "polynomials over different variable sets");
  }

  std::size_t nvars_;
  Terms terms_;
};

using SparsePoly = BasicPoly<BigInt>;
using ComplexPoly = BasicPoly<Complex>;

/// Canonical text: graded-lex terms, variables printed as "x" + label.
/// Default labels are "0", "1", ...
std::string to_string(const SparsePoly& p, std::span<const std::string> labels = {});

/// Inverse of to_string for the same label table. Accepts terms in any order.
SparsePoly parse_poly(std::string_view text, std::span<const std::string> labels);

Complex eval_complex(const SparsePoly& p, std::span<const Complex> point);
Complex eval_complex(const ComplexPoly& p, std::span<const Complex> point);

ComplexPoly to_complex(const SparsePoly& p);

/// Square matrix whose entries are single variables; entry(i, j) holds a
/// variable index in [0, nvars).
class VarMatrix {
 public:
  VarMatrix(std::size_t dim, std::size_t nvars, std::vector<std::size_t> entries);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Every row and every column holds each variable the same number of times
  /// as the first row does, and the diagonal is constant.
  bool has_constant_profile() const;

 private:
  std::size_t dim_;
  std::size_t nvars_;
  std::vector<std::size_t> entries_;
};

/// Exact Leibniz expansion. Throws DimTooLargeForSymbolic when dim > cap.
SparsePoly det_symbolic(const VarMatrix& m, std::size_t cap = kDefaultSymbolicCap);

/// Leibniz expansion for a matrix with polynomial entries; zero entries prune
/// the permutation tree.
SparsePoly det_symbolic(const std::vector<std::vector<SparsePoly>>& m, std::size_t nvars,
                        std::size_t cap = kDefaultSymbolicCap);

/// Determinant after substituting `point`. Gaussian-integer points are
/// evaluated exactly by fraction-free elimination over Z[i]; anything else
/// goes through partial-pivot LU.
Complex det_eval(const VarMatrix& m, std::span<const Complex> point);

/// Determinant of a dense complex matrix given row-major.
Complex det_dense(std::span<const Complex> row_major, std::size_t dim);

}  // namespace superdet
