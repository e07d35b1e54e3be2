#include "clusteralg/invariants.hpp"

#include "clusteralg/errors.hpp"

#include <algorithm>

namespace clusteralg {

DVector dvector_direct(const LaurentPoly& x) {
  IntVector m = x.min_x_exponents();
  for (auto& e : m) e = -e;
  return {std::move(m)};
}

IntMatrix dmatrix_direct(const Seed& s) {
  std::vector<IntVector> cols;
  for (const auto& x : s.cluster()) cols.push_back(dvector_direct(x).entries);
  return IntMatrix::from_columns(cols);
}

IntMatrix dmatrix_recurrence(std::span<const std::size_t> path, const IntMatrix& bmat) {
  const std::size_t n = bmat.rows();
  IntMatrix d = -IntMatrix::identity(n);
  IntMatrix b = bmat;
  for (std::size_t k : path) {
    if (k >= n) throw IndexOutOfRange("mutation direction " + std::to_string(k + 1) + " out of range");
    IntMatrix next = d;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pos = 0, neg = 0;
      for (std::size_t l = 0; l < n; ++l) {
        const std::int64_t blk = b(l, k);
        if (blk > 0) pos = checked::add(pos, checked::mul(d(i, l), blk));
        if (blk < 0) neg = checked::add(neg, checked::mul(checked::neg(d(i, l)), blk));
      }
      next(i, k) = checked::add(checked::neg(d(i, k)), std::max(pos, neg));
    }
    d = std::move(next);
    b = mutate_matrix(b, k);
  }
  return d;
}

GVector gvector(const LaurentPoly& x) {
  const ExponentVector* found = nullptr;
  for (const auto& [e, c] : x.terms()) {
    auto ys = e.yexp();
    if (!std::all_of(ys.begin(), ys.end(), [](Exponent v) { return v == 0; })) continue;
    if (found) throw MalformedExpansion("y-free part has more than one term: " + x.to_string());
    if (c != 1) throw MalformedExpansion("y-free term has coefficient " + c.str() + ": " + x.to_string());
    found = &e;
  }
  if (!found) throw MalformedExpansion("expansion has no y-free term: " + x.to_string());
  auto xs = found->xexp();
  return {IntVector(xs.begin(), xs.end())};
}

IntMatrix gmatrix(const Seed& s) {
  if (s.mode() != CoefficientMode::principal)
    throw PreconditionViolated("g-vectors need principal coefficients");
  std::vector<IntVector> cols;
  for (const auto& x : s.cluster()) cols.push_back(gvector(x).entries);
  IntMatrix g = IntMatrix::from_columns(cols);
  const BigInt det = g.determinant();
  if (det != 1 && det != -1) throw NonUnimodular("G-matrix determinant is " + det.str());
  return g;
}

IntMatrix rmatrix(const Seed& s, const Seed& t) {
  return gmatrix(s).inverse_unimodular() * gmatrix(t);
}

GVector monomial_gvector(const Seed& s, std::span<const std::int64_t> v) {
  if (std::any_of(v.begin(), v.end(), [](std::int64_t e) { return e < 0; }))
    throw PreconditionViolated("cluster monomial exponents must be nonnegative");
  return {gmatrix(s) * v};
}

bool proper_laurent_check(const Seed& s, std::span<const std::int64_t> v, const Seed& target) {
  if (v.size() != s.rank()) throw RankMismatch("exponent vector has wrong length");
  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw PreconditionViolated("cluster monomial exponents must be nonnegative");
    if (v[i] > 0 && !target.slot_of(s.cluster()[i])) inside = false;
  }
  if (inside) throw PreconditionViolated("monomial is a cluster monomial of the target seed");

  const auto expanded = expand_in(s, target, CoefficientMode::trivial);
  LaurentPoly m = LaurentPoly::constant(s.rank(), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) m = m * expanded[i].pow(static_cast<unsigned>(v[i]));
  for (const auto& [e, c] : m.terms()) {
    auto xs = e.xexp();
    if (std::none_of(xs.begin(), xs.end(), [](Exponent x) { return x < 0; })) return false;
  }
  return true;
}

std::vector<IntVector> exponent_vectors(std::size_t n, int max_degree) {
  std::vector<IntVector> out;
  IntVector v(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (left < max_degree) out.push_back(v);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      v[i] = e;
      self(self, i + 1, left - e);
    }
    v[i] = 0;
  };
  if (max_degree > 0) rec(rec, 0, max_degree);
  return out;
}

}  // namespace clusteralg
