#pragma once

// Exact sparse Laurent polynomials in x_1..x_n with polynomial coefficients
// in y_1..y_n, and the tropical semifield Trop(y_1..y_n).
//
// Every cluster-variable expansion in the library is a LaurentPoly over the
// initial cluster. Coefficient-free expansions are the special case where
// every y-exponent is zero.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clusteralg {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::int32_t;
using IntVector = std::vector<std::int64_t>;

/// Exponents of x_1..x_n followed by exponents of y_1..y_n.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t rank) : data_(2 * rank, 0) {}
  ExponentVector(std::span<const Exponent> xexp, std::span<const Exponent> yexp);

  std::size_t rank() const { return data_.size() / 2; }

  std::span<const Exponent> xexp() const { return {data_.data(), rank()}; }
  std::span<const Exponent> yexp() const { return {data_.data() + rank(), rank()}; }
  std::span<Exponent> xexp() { return {data_.data(), rank()}; }
  std::span<Exponent> yexp() { return {data_.data() + rank(), rank()}; }

  /// Concatenated (xexp, yexp) view; the canonical order works on this.
  std::span<const Exponent> all() const { return data_; }

  std::int64_t total_degree() const;
  bool is_zero() const;

  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;
  ExponentVector operator-() const;
  ExponentVector scaled(std::int64_t factor) const;

  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<Exponent> data_;
};

/// Graded lexicographic order on the concatenated exponent vector:
/// total degree first, then lexicographic. Compatible with addition, so
/// it is a monomial order on the Laurent group.
struct GrLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// A monomial y^a of Trop(y_1..y_n).
class TropicalMonomial {
 public:
  TropicalMonomial() = default;
  explicit TropicalMonomial(std::size_t rank) : yexp_(rank, 0) {}
  explicit TropicalMonomial(std::vector<Exponent> yexp) : yexp_(std::move(yexp)) {}

  static TropicalMonomial one(std::size_t rank) { return TropicalMonomial(rank); }
  static TropicalMonomial generator(std::size_t rank, std::size_t i);

  std::size_t rank() const { return yexp_.size(); }
  const std::vector<Exponent>& yexp() const { return yexp_; }
  Exponent operator[](std::size_t i) const { return yexp_[i]; }
  bool is_one() const;

  /// Semifield multiplication: exponents add.
  TropicalMonomial operator*(const TropicalMonomial& o) const;
  TropicalMonomial inverse() const;
  TropicalMonomial pow(std::int64_t e) const;

  bool operator==(const TropicalMonomial&) const = default;
  auto operator<=>(const TropicalMonomial&) const = default;

 private:
  std::vector<Exponent> yexp_;
};

/// Tropical addition: componentwise minimum of exponents.
TropicalMonomial trop_oplus(const TropicalMonomial& a, const TropicalMonomial& b);

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, BigInt, GrLexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

  static LaurentPoly constant(std::size_t rank, const BigInt& c);
  static LaurentPoly monomial(const ExponentVector& e, const BigInt& c = 1);
  static LaurentPoly x(std::size_t rank, std::size_t i, Exponent power = 1);
  static LaurentPoly y(std::size_t rank, std::size_t i, Exponent power = 1);
  static LaurentPoly y_monomial(const TropicalMonomial& m);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly pow(unsigned e) const;

  /// Multiply by a single term without touching coefficients' sparsity.
  LaurentPoly shifted(const ExponentVector& e) const;

  /// Componentwise minimum of the x-exponents over all terms.
  /// Throws ZeroPolynomial on the zero polynomial.
  IntVector min_x_exponents() const;

  /// Canonical text form, leading (grlex-largest) term first.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, std::size_t rank);

  bool operator==(const LaurentPoly& o) const;
  /// Total order used for canonical sorting of cluster entries.
  std::strong_ordering operator<=>(const LaurentPoly& o) const;

 private:
  void add_term(const ExponentVector& e, const BigInt& c);
  void check_rank(const LaurentPoly& o, const char* op) const;

  std::size_t rank_ = 0;
  TermMap terms_;
};

/// Returns r with r * q == p, or throws InexactDivision.
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace clusteralg
