#include "clusteralg/seed.hpp"

#include "clusteralg/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace clusteralg {

const char* to_string(CoefficientMode mode) {
  return mode == CoefficientMode::principal ? "principal" : "trivial";
}

CoefficientMode parse_mode(std::string_view text) {
  if (text == "principal") return CoefficientMode::principal;
  if (text == "trivial") return CoefficientMode::trivial;
  throw ParseError("unknown coefficient mode '" + std::string(text) + "'");
}

SkewSymmetrizer find_skew_symmetrizer(const IntMatrix& bmat) {
  using boost::multiprecision::cpp_rational;
  if (!bmat.is_square()) throw NotSkewSymmetrizable("exchange matrix is not square");
  const std::size_t n = bmat.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (bmat(i, i) != 0)
      throw NotSkewSymmetrizable("nonzero diagonal entry at " + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool zi = bmat(i, j) == 0, zj = bmat(j, i) == 0;
      if (zi != zj || (!zi && (bmat(i, j) > 0) == (bmat(j, i) > 0)))
        throw NotSkewSymmetrizable("sign pattern violated at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
    }
  }

  // Propagate d_j = -d_i b_ij / b_ji along the diagram, one component at a time.
  std::vector<cpp_rational> ratio(n, 0);
  std::vector<int> component(n, -1);
  int ncomp = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    ratio[start] = 1;
    component[start] = ncomp;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || bmat(i, j) == 0) continue;
        cpp_rational want = -ratio[i] * bmat(i, j) / bmat(j, i);
        if (component[j] < 0) {
          component[j] = ncomp;
          ratio[j] = want;
          q.push(j);
        } else if (ratio[j] != want) {
          throw NotSkewSymmetrizable("inconsistent symmetrizer ratios around a cycle through " +
                                     std::to_string(i + 1) + " and " + std::to_string(j + 1));
        }
      }
    }
    ++ncomp;
  }

  SkewSymmetrizer s;
  s.diag.assign(n, 0);
  for (int c = 0; c < ncomp; ++c) {
    BigInt l = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) l = boost::multiprecision::lcm(l, denominator(ratio[i]));
    BigInt g = 0;
    std::vector<BigInt> v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) {
        v[i] = numerator(ratio[i]) * (l / denominator(ratio[i]));
        g = boost::multiprecision::gcd(g, v[i]);
      }
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) s.diag[i] = static_cast<std::int64_t>(v[i] / g);
  }
  return s;
}

IntMatrix mutate_matrix(const IntMatrix& bmat, std::size_t k) {
  const std::size_t n = bmat.rows();
  if (k >= bmat.cols()) throw IndexOutOfRange("mutation direction " + std::to_string(k + 1) + " out of range");
  IntMatrix r(n, bmat.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < bmat.cols(); ++j) {
      if (i == k || j == k) {
        r(i, j) = checked::neg(bmat(i, j));
      } else {
        const std::int64_t bik = bmat(i, k);
        const std::int64_t prod = checked::mul(bik, bmat(k, j));
        const std::int64_t sgn = (bik > 0) - (bik < 0);
        r(i, j) = checked::add(bmat(i, j), sgn * std::max<std::int64_t>(prod, 0));
      }
    }
  return r;
}

IntMatrix mutate_matrix_along(IntMatrix bmat, std::span<const std::size_t> path) {
  for (std::size_t k : path) bmat = mutate_matrix(bmat, k);
  return bmat;
}

Path extend_path(Path p, std::size_t k) {
  if (!p.empty() && p.back() == k)
    p.pop_back();
  else
    p.push_back(k);
  return p;
}

Seed Seed::initial(const IntMatrix& bmat, CoefficientMode mode) {
  if (bmat.rows() == 0) throw InvalidArgument("exchange matrix must have rank at least 1");
  find_skew_symmetrizer(bmat);
  const std::size_t n = bmat.rows();
  Seed s;
  s.bmat_ = bmat;
  s.mode_ = mode;
  s.root_bmat_ = std::make_shared<const IntMatrix>(bmat);
  for (std::size_t i = 0; i < n; ++i) {
    s.cluster_.push_back(LaurentPoly::x(n, i));
    s.coeffs_.push_back(mode == CoefficientMode::principal ? TropicalMonomial::generator(n, i)
                                                           : TropicalMonomial::one(n));
  }
  return s;
}

std::optional<std::size_t> Seed::slot_of(const LaurentPoly& x) const {
  for (std::size_t i = 0; i < cluster_.size(); ++i)
    if (cluster_[i] == x) return i;
  return std::nullopt;
}

LaurentPoly Seed::monomial(std::span<const std::int64_t> v) const {
  if (v.size() != rank()) throw RankMismatch("monomial exponent vector has wrong length");
  LaurentPoly m = LaurentPoly::constant(rank(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw PreconditionViolated("cluster monomial exponents must be nonnegative");
    if (v[i] > 0) m = m * cluster_[i].pow(static_cast<unsigned>(v[i]));
  }
  return m;
}

bool Seed::operator==(const Seed& o) const {
  return mode_ == o.mode_ && bmat_ == o.bmat_ && coeffs_ == o.coeffs_ && cluster_ == o.cluster_;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  if (k >= n) throw IndexOutOfRange("mutation direction " + std::to_string(k + 1) + " out of range");
  const IntMatrix& b = s.bmat_;
  const TropicalMonomial& yk = s.coeffs_[k];

  // x_k' = (y_k prod x_i^[b_ik]+ + prod x_i^[-b_ik]+) / ((1 (+) y_k) x_k)
  LaurentPoly pos = LaurentPoly::y_monomial(yk);
  LaurentPoly neg = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t bik = b(i, k);
    if (bik > 0) pos = pos * s.cluster_[i].pow(static_cast<unsigned>(bik));
    if (bik < 0) neg = neg * s.cluster_[i].pow(static_cast<unsigned>(-bik));
  }
  const TropicalMonomial denom = trop_oplus(TropicalMonomial::one(n), yk);
  LaurentPoly numer = (pos + neg) * LaurentPoly::y_monomial(denom.inverse());

  Seed r;
  r.mode_ = s.mode_;
  r.root_bmat_ = s.root_bmat_;
  r.path_ = extend_path(s.path_, k);
  r.cluster_ = s.cluster_;
  r.cluster_[k] = div_exact(numer, s.cluster_[k]);

  r.coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      r.coeffs_[i] = yk.inverse();
    } else {
      const std::int64_t bki = b(k, i);
      r.coeffs_[i] = s.coeffs_[i] * yk.pow(std::max<std::int64_t>(bki, 0)) * denom.pow(-bki);
    }
  }
  r.bmat_ = mutate_matrix(b, k);
  return r;
}

Seed relabel(const Seed& s, std::span<const std::size_t> sigma) {
  const std::size_t n = s.rank();
  if (sigma.size() != n) throw RankMismatch("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t v : sigma) {
    if (v >= n || seen[v]) throw InvalidArgument("relabeling is not a permutation");
    seen[v] = true;
  }
  Seed r;
  r.mode_ = s.mode_;
  r.bmat_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    r.cluster_.push_back(s.cluster_[sigma[i]]);
    r.coeffs_.push_back(s.coeffs_[sigma[i]]);
    for (std::size_t j = 0; j < n; ++j) r.bmat_(i, j) = s.bmat_(sigma[i], sigma[j]);
  }
  r.root_bmat_ = std::make_shared<const IntMatrix>(r.bmat_);
  return r;
}

Seed mutate_along(Seed s, std::span<const std::size_t> path) {
  for (std::size_t k : path) s = mutate_seed(s, k);
  return s;
}

std::optional<std::vector<std::size_t>> seeds_equivalent(const Seed& s, const Seed& t) {
  if (s.rank() != t.rank()) throw RankMismatch("seeds of different rank");
  if (s.mode() != t.mode()) throw PreconditionViolated("seeds in different coefficient modes");
  const std::size_t n = s.rank();
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto j = t.slot_of(s.cluster()[i]);
    if (!j) return std::nullopt;
    sigma[i] = *j;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s.coeffs()[i] != t.coeffs()[sigma[i]]) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j)
      if (s.bmat()(i, j) != t.bmat()(sigma[i], sigma[j])) return std::nullopt;
  }
  return sigma;
}

namespace {

std::string key_with_order(const Seed& s, std::span<const std::size_t> order) {
  std::string key = std::to_string(s.rank());
  key += s.mode() == CoefficientMode::principal ? "|P|x:" : "|T|x:";
  for (std::size_t i : order) {
    key += s.cluster()[i].to_string();
    key += ';';
  }
  key += "|y:";
  for (std::size_t i : order) {
    for (Exponent e : s.coeffs()[i].yexp()) {
      key += std::to_string(e);
      key += ',';
    }
    key += ';';
  }
  key += "|B:";
  for (std::size_t i : order)
    for (std::size_t j : order) {
      key += std::to_string(s.bmat()(i, j));
      key += ',';
    }
  return key;
}

}  // namespace

std::string canonical_key(const Seed& s) {
  std::vector<std::size_t> order(s.rank());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return s.cluster()[a] < s.cluster()[b]; });
  return key_with_order(s, order);
}

std::string labeled_key(const Seed& s) {
  std::vector<std::size_t> order(s.rank());
  std::iota(order.begin(), order.end(), 0);
  return key_with_order(s, order);
}

std::vector<LaurentPoly> expand_in(const Seed& of, const Seed& wrt, CoefficientMode mode) {
  if (of.root_bmat() != wrt.root_bmat())
    throw PreconditionViolated("seeds belong to different cluster patterns");
  Path route;
  for (auto it = wrt.path().rbegin(); it != wrt.path().rend(); ++it) route = extend_path(std::move(route), *it);
  for (std::size_t k : of.path()) route = extend_path(std::move(route), k);
  return mutate_along(Seed::initial(wrt.bmat(), mode), route).cluster();
}

std::vector<std::vector<LaurentPoly>> expand_many(std::span<const Seed* const> of, const Seed& wrt,
                                                  CoefficientMode mode) {
  Path back;
  for (auto it = wrt.path().rbegin(); it != wrt.path().rend(); ++it) back = extend_path(std::move(back), *it);
  std::map<Path, Seed> memo;
  memo.emplace(Path{}, mutate_along(Seed::initial(wrt.bmat(), mode), back));
  std::vector<std::vector<LaurentPoly>> out;
  for (const Seed* s : of) {
    if (s->root_bmat() != wrt.root_bmat()) throw PreconditionViolated("seeds belong to different cluster patterns");
    const Path& p = s->path();
    std::size_t len = p.size();
    auto it = memo.end();
    for (;; --len) {
      it = memo.find(Path(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len)));
      if (it != memo.end()) break;
    }
    for (; len < p.size(); ++len)
      it = memo.emplace(Path(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len) + 1), mutate_seed(it->second, p[len]))
               .first;
    out.push_back(it->second.cluster());
  }
  return out;
}

}  // namespace clusteralg
