#include "clusteralg/laurent.hpp"

#include "clusteralg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace clusteralg {

ExponentVector::ExponentVector(std::span<const Exponent> xexp, std::span<const Exponent> yexp) {
  if (xexp.size() != yexp.size())
    throw RankMismatch("x- and y-exponent vectors differ in length");
  data_.reserve(2 * xexp.size());
  data_.insert(data_.end(), xexp.begin(), xexp.end());
  data_.insert(data_.end(), yexp.begin(), yexp.end());
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t s = 0;
  for (Exponent e : data_) s += e;
  return s;
}

bool ExponentVector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Exponent e) { return e == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  if (o.data_.size() != data_.size()) throw RankMismatch("exponent vector rank mismatch");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked::add(data_[i], o.data_[i]);
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  if (o.data_.size() != data_.size()) throw RankMismatch("exponent vector rank mismatch");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked::sub(data_[i], o.data_[i]);
  return r;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector r = *this;
  for (auto& e : r.data_) e = checked::neg(e);
  return r;
}

ExponentVector ExponentVector::scaled(std::int64_t factor) const {
  ExponentVector r = *this;
  for (auto& e : r.data_) e = checked::narrow<Exponent>(checked::mul<std::int64_t>(e, factor));
  return r;
}

bool GrLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  auto sa = a.all();
  auto sb = b.all();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

// ---------------------------------------------------------------------------
// Tropical semifield

TropicalMonomial TropicalMonomial::generator(std::size_t rank, std::size_t i) {
  if (i >= rank) throw IndexOutOfRange("tropical generator index out of range");
  TropicalMonomial m(rank);
  m.yexp_[i] = 1;
  return m;
}

bool TropicalMonomial::is_one() const {
  return std::all_of(yexp_.begin(), yexp_.end(), [](Exponent e) { return e == 0; });
}

TropicalMonomial TropicalMonomial::operator*(const TropicalMonomial& o) const {
  if (o.rank() != rank()) throw RankMismatch("tropical monomial rank mismatch");
  TropicalMonomial r = *this;
  for (std::size_t i = 0; i < yexp_.size(); ++i) r.yexp_[i] = checked::add(yexp_[i], o.yexp_[i]);
  return r;
}

TropicalMonomial TropicalMonomial::inverse() const {
  TropicalMonomial r = *this;
  for (auto& e : r.yexp_) e = checked::neg(e);
  return r;
}

TropicalMonomial TropicalMonomial::pow(std::int64_t e) const {
  TropicalMonomial r = *this;
  for (auto& v : r.yexp_) v = checked::narrow<Exponent>(checked::mul<std::int64_t>(v, e));
  return r;
}

TropicalMonomial trop_oplus(const TropicalMonomial& a, const TropicalMonomial& b) {
  if (a.rank() != b.rank()) throw RankMismatch("tropical monomial rank mismatch");
  std::vector<Exponent> r(a.rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return TropicalMonomial(std::move(r));
}

// ---------------------------------------------------------------------------
// Laurent polynomials

LaurentPoly LaurentPoly::constant(std::size_t rank, const BigInt& c) {
  LaurentPoly p(rank);
  p.add_term(ExponentVector(rank), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, const BigInt& c) {
  LaurentPoly p(e.rank());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::x(std::size_t rank, std::size_t i, Exponent power) {
  if (i >= rank) throw IndexOutOfRange("x index out of range");
  ExponentVector e(rank);
  e.xexp()[i] = power;
  return monomial(e);
}

LaurentPoly LaurentPoly::y(std::size_t rank, std::size_t i, Exponent power) {
  if (i >= rank) throw IndexOutOfRange("y index out of range");
  ExponentVector e(rank);
  e.yexp()[i] = power;
  return monomial(e);
}

LaurentPoly LaurentPoly::y_monomial(const TropicalMonomial& m) {
  ExponentVector e(m.rank());
  std::copy(m.yexp().begin(), m.yexp().end(), e.yexp().begin());
  return monomial(e);
}

void LaurentPoly::add_term(const ExponentVector& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& o, const char* op) const {
  if (o.rank_ != rank_)
    throw RankMismatch(std::string("rank mismatch in ") + op + ": " + std::to_string(rank_) +
                       " vs " + std::to_string(o.rank_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o, "addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_rank(o, "subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

constexpr std::uint64_t kDenseCells = std::uint64_t{1} << 21;

struct Box {
  std::vector<std::int64_t> lo, hi;
};

Box box_of(const LaurentPoly& f) {
  const std::size_t m = 2 * f.rank();
  Box b{std::vector<std::int64_t>(m, std::numeric_limits<std::int64_t>::max()),
        std::vector<std::int64_t>(m, std::numeric_limits<std::int64_t>::min())};
  for (const auto& [e, c] : f.terms()) {
    auto a = e.all();
    for (std::size_t i = 0; i < m; ++i) {
      b.lo[i] = std::min<std::int64_t>(b.lo[i], a[i]);
      b.hi[i] = std::max<std::int64_t>(b.hi[i], a[i]);
    }
  }
  return b;
}

// Kronecker substitution of an exponent box into [0, cells).
struct Packing {
  std::vector<std::uint64_t> stride;
  std::uint64_t cells = 1;
  bool ok = true;

  explicit Packing(const Box& b) : stride(b.lo.size()) {
    constexpr std::uint64_t kMax = std::uint64_t{1} << 62;
    for (std::size_t i = 0; i < stride.size(); ++i) {
      stride[i] = cells;
      const auto ext = static_cast<std::uint64_t>(b.hi[i] - b.lo[i] + 1);
      if (ext > kMax / cells) {
        ok = false;
        return;
      }
      cells *= ext;
    }
  }

  std::uint64_t encode(const ExponentVector& e, const std::vector<std::int64_t>& base) const {
    auto a = e.all();
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < stride.size(); ++i) k += static_cast<std::uint64_t>(a[i] - base[i]) * stride[i];
    return k;
  }

  std::vector<std::int64_t> digits(std::uint64_t k) const {
    std::vector<std::int64_t> d(stride.size());
    for (std::size_t i = stride.size(); i-- > 0;) {
      d[i] = static_cast<std::int64_t>(k / stride[i]);
      k %= stride[i];
    }
    return d;
  }

  ExponentVector decode(std::uint64_t k, const std::vector<std::int64_t>& base) const {
    auto d = digits(k);
    std::vector<Exponent> e(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) e[i] = static_cast<Exponent>(d[i] + base[i]);
    const std::span<const Exponent> all(e);
    return ExponentVector(all.first(e.size() / 2), all.subspan(e.size() / 2));
  }
};

}  // namespace

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_rank(o, "multiplication");
  LaurentPoly r(rank_);
  if (terms_.empty() || o.terms_.empty()) return r;
  if (terms_.size() == 1 || o.terms_.size() == 1) {
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  const Box ba = box_of(*this), bb = box_of(o);
  Box prod = ba;
  for (std::size_t i = 0; i < prod.lo.size(); ++i) {
    prod.lo[i] += bb.lo[i];
    prod.hi[i] += bb.hi[i];
    if (prod.lo[i] < std::numeric_limits<Exponent>::min() || prod.hi[i] > std::numeric_limits<Exponent>::max())
      throw OverflowError("exponent overflow in multiplication");
  }
  const Packing pk(prod);
  const std::size_t pairs = terms_.size() * o.terms_.size();

  if (!pk.ok) {
    std::vector<std::pair<ExponentVector, BigInt>> prods;
    prods.reserve(pairs);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) prods.emplace_back(ea + eb, ca * cb);
    std::sort(prods.begin(), prods.end(), [](const auto& x, const auto& y) { return GrLexLess{}(x.first, y.first); });
    for (std::size_t i = 0; i < prods.size();) {
      std::size_t j = i + 1;
      BigInt c = std::move(prods[i].second);
      while (j < prods.size() && prods[j].first == prods[i].first) c += prods[j++].second;
      if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), std::move(prods[i].first), std::move(c));
      i = j;
    }
    return r;
  }

  // Packed keys are additive: key(a + b) = key_a(a) + key_b(b) with each
  // operand encoded against its own lower corner.
  std::vector<std::pair<std::uint64_t, const BigInt*>> as, bs;
  for (const auto& [e, c] : terms_) as.emplace_back(pk.encode(e, ba.lo), &c);
  for (const auto& [e, c] : o.terms_) bs.emplace_back(pk.encode(e, bb.lo), &c);

  std::vector<std::pair<std::uint64_t, BigInt>> merged;
  if (pk.cells <= kDenseCells && pk.cells <= 8 * pairs) {
    std::vector<BigInt> acc(pk.cells);
    std::vector<bool> hit(pk.cells, false);
    for (const auto& [ia, ca] : as)
      for (const auto& [ib, cb] : bs) {
        acc[ia + ib] += *ca * *cb;
        hit[ia + ib] = true;
      }
    for (std::uint64_t k = 0; k < pk.cells; ++k)
      if (hit[k] && !acc[k].is_zero()) merged.emplace_back(k, std::move(acc[k]));
  } else {
    std::vector<std::pair<std::uint64_t, BigInt>> prods;
    prods.reserve(pairs);
    for (const auto& [ia, ca] : as)
      for (const auto& [ib, cb] : bs) prods.emplace_back(ia + ib, *ca * *cb);
    std::sort(prods.begin(), prods.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < prods.size();) {
      std::size_t j = i + 1;
      BigInt c = std::move(prods[i].second);
      while (j < prods.size() && prods[j].first == prods[i].first) c += prods[j++].second;
      if (!c.is_zero()) merged.emplace_back(prods[i].first, std::move(c));
      i = j;
    }
  }
  std::vector<std::pair<ExponentVector, BigInt>> out;
  out.reserve(merged.size());
  for (auto& [k, c] : merged) out.emplace_back(pk.decode(k, prod.lo), std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return GrLexLess{}(x.first, y.first); });
  for (auto& [e, c] : out) r.terms_.emplace_hint(r.terms_.end(), std::move(e), std::move(c));
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(rank_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& e) const {
  if (e.rank() != rank_) throw RankMismatch("rank mismatch in monomial shift");
  LaurentPoly r(rank_);
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t + e, c);
  return r;
}

IntVector LaurentPoly::min_x_exponents() const {
  if (is_zero()) throw ZeroPolynomial("minimal exponents of the zero polynomial");
  IntVector m(rank_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    auto xs = e.xexp();
    for (std::size_t j = 0; j < rank_; ++j)
      m[j] = first ? xs[j] : std::min<std::int64_t>(m[j], xs[j]);
    first = false;
  }
  return m;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return rank_ == o.rank_ && terms_ == o.terms_;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
  if (auto c = rank_ <=> o.rank_; c != 0) return c;
  GrLexLess less;
  auto a = terms_.rbegin();
  auto b = o.terms_.rbegin();
  for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
    if (less(a->first, b->first)) return std::strong_ordering::less;
    if (less(b->first, a->first)) return std::strong_ordering::greater;
    if (a->second != b->second)
      return a->second < b->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> o.terms_.size();
}

namespace {

// Kronecker substitution over the box of p. It is injective there, so a zero
// remainder with every quotient term inside the admissible box certifies
// p = r*q. Returns nullopt only if the box does not fit in 64 bits.
template <typename Store>
LaurentPoly div_packed(const LaurentPoly& p, const LaurentPoly& q, const Box& pb, const Box& qb,
                       const Packing& pk, Store& rem) {
  for (const auto& [e, c] : p.terms()) rem.set(pk.encode(e, pb.lo), c);
  std::vector<std::pair<std::uint64_t, BigInt>> div;
  for (const auto& [e, c] : q.terms()) div.emplace_back(pk.encode(e, qb.lo), c);
  std::sort(div.begin(), div.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::uint64_t top = div.back().first;
  const BigInt lead = div.back().second;

  const std::size_t m = pb.lo.size();
  std::vector<std::int64_t> qlo(m), room(m);
  for (std::size_t i = 0; i < m; ++i) {
    qlo[i] = pb.lo[i] - qb.lo[i];
    room[i] = (pb.hi[i] - pb.lo[i]) - (qb.hi[i] - qb.lo[i]);
  }
  std::vector<std::pair<ExponentVector, BigInt>> quot;
  BigInt qc, r;
  while (auto idx = rem.top()) {
    if (*idx < top) throw InexactDivision("nonzero remainder");
    boost::multiprecision::divide_qr(rem.get(*idx), lead, qc, r);
    if (!r.is_zero()) throw InexactDivision("leading coefficient does not divide");
    const std::uint64_t shift = *idx - top;
    auto d = pk.digits(shift);
    for (std::size_t i = 0; i < m; ++i)
      if (d[i] > room[i]) throw InexactDivision("quotient term leaves the admissible exponent box");
    for (const auto& [j, c] : div) rem.sub(shift + j, qc * c);
    quot.emplace_back(pk.decode(shift, qlo), qc);
  }
  std::sort(quot.begin(), quot.end(), [](const auto& a, const auto& b) { return GrLexLess{}(a.first, b.first); });
  LaurentPoly out(p.rank());
  for (auto& [e, c] : quot) out += LaurentPoly::monomial(e, c);
  return out;
}

struct DenseStore {
  std::vector<BigInt> v;
  std::uint64_t hint;
  explicit DenseStore(std::uint64_t cells) : v(cells), hint(cells) {}
  void set(std::uint64_t k, const BigInt& c) { v[k] = c; }
  const BigInt& get(std::uint64_t k) const { return v[k]; }
  void sub(std::uint64_t k, const BigInt& c) { v[k] -= c; }
  std::optional<std::uint64_t> top() {
    while (hint > 0 && v[hint - 1].is_zero()) --hint;
    if (hint == 0) return std::nullopt;
    return hint - 1;
  }
};

struct SparseStore {
  std::map<std::uint64_t, BigInt> m;
  void set(std::uint64_t k, const BigInt& c) { m[k] = c; }
  const BigInt& get(std::uint64_t k) const { return m.at(k); }
  void sub(std::uint64_t k, const BigInt& c) {
    auto [it, fresh] = m.try_emplace(k);
    it->second -= c;
    if (it->second.is_zero()) m.erase(it);
  }
  std::optional<std::uint64_t> top() const {
    if (m.empty()) return std::nullopt;
    return m.rbegin()->first;
  }
};

std::optional<LaurentPoly> div_fast(const LaurentPoly& p, const LaurentPoly& q) {
  const Box pb = box_of(p), qb = box_of(q);
  const Packing pk(pb);
  if (!pk.ok) return std::nullopt;
  if (pk.cells <= kDenseCells) {
    DenseStore st(pk.cells);
    return div_packed(p, q, pb, qb, pk, st);
  }
  SparseStore st;
  return div_packed(p, q, pb, qb, pk, st);
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.rank() != q.rank()) throw RankMismatch("rank mismatch in exact division");
  if (q.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  const std::size_t n = p.rank();
  if (p.is_zero()) return LaurentPoly(n);

  // If p = r*q then, per coordinate, min(p) = min(r) + min(q) and
  // max(p) = max(r) + max(q). Every quotient term must lie in that box,
  // which also bounds the loop below.
  auto bounds = [n](const LaurentPoly& f) {
    std::vector<Exponent> lo(2 * n), hi(2 * n);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      auto a = e.all();
      for (std::size_t i = 0; i < 2 * n; ++i) {
        lo[i] = first ? a[i] : std::min(lo[i], a[i]);
        hi[i] = first ? a[i] : std::max(hi[i], a[i]);
      }
      first = false;
    }
    return std::pair{lo, hi};
  };
  auto [plo, phi] = bounds(p);
  auto [qlo, qhi] = bounds(q);
  std::vector<std::int64_t> lo(2 * n), hi(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    lo[i] = std::int64_t{plo[i]} - qlo[i];
    hi[i] = std::int64_t{phi[i]} - qhi[i];
    if (lo[i] > hi[i]) throw InexactDivision("exponent ranges are incompatible");
  }

  if (auto fast = div_fast(p, q)) return std::move(*fast);

  const auto& [lead_exp, lead_coeff] = *q.terms().rbegin();
  LaurentPoly quotient(n);
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    ExponentVector m = e - lead_exp;
    auto a = m.all();
    for (std::size_t i = 0; i < 2 * n; ++i)
      if (a[i] < lo[i] || a[i] > hi[i])
        throw InexactDivision("quotient term leaves the admissible exponent box");
    BigInt qc;
    BigInt r;
    boost::multiprecision::divide_qr(c, lead_coeff, qc, r);
    if (r != 0) throw InexactDivision("leading coefficient does not divide");
    LaurentPoly step = LaurentPoly::monomial(m, qc);
    quotient += step;
    rem -= step * q;
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Text form: "2*x1^-1*x2*y1 - x2^-1 + 3"

namespace {

void append_factor(std::string& out, char sym, std::size_t idx, Exponent e, bool& any) {
  if (e == 0) return;
  if (any) out += '*';
  out += sym;
  out += std::to_string(idx + 1);
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
  any = true;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t rank) : s_(text), rank_(rank) {}

  LaurentPoly parse() {
    LaurentPoly result(rank_);
    skip_ws();
    if (done()) throw ParseError("empty polynomial text");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      result += parse_term(sign);
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  LaurentPoly parse_term(int sign) {
    BigInt coeff = sign;
    ExponentVector exps(rank_);
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (done()) fail("unexpected end of input");
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= parse_unsigned();
      } else if (ch == 'x' || ch == 'y') {
        get();
        std::size_t idx = static_cast<std::size_t>(parse_unsigned());
        if (idx < 1 || idx > rank_) fail("variable index out of range");
        Exponent e = 1;
        skip_ws();
        if (!done() && peek() == '^') {
          get();
          skip_ws();
          e = parse_signed();
        }
        auto slot = ch == 'x' ? exps.xexp() : exps.yexp();
        slot[idx - 1] = checked::add(slot[idx - 1], e);
      } else {
        fail("unexpected character");
      }
      have_factor = true;
      skip_ws();
      if (!done() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return LaurentPoly::monomial(exps, coeff);
  }

  BigInt parse_unsigned() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Exponent parse_signed() {
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) neg = get() == '-';
    BigInt v = parse_unsigned();
    if (neg) v = -v;
    if (v > std::numeric_limits<Exponent>::max() || v < std::numeric_limits<Exponent>::min())
      throw OverflowError("exponent out of range");
    return static_cast<Exponent>(v);
  }

  [[noreturn]] void fail(const char* msg) const {
    throw ParseError(std::string(msg) + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(s_) + "\"");
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    BigInt mag = negative ? BigInt(-c) : c;
    std::string mono;
    bool any = false;
    for (std::size_t i = 0; i < rank_; ++i) append_factor(mono, 'x', i, e.xexp()[i], any);
    for (std::size_t i = 0; i < rank_; ++i) append_factor(mono, 'y', i, e.yexp()[i], any);
    if (!any) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t rank) {
  return PolyParser(text, rank).parse();
}

}  // namespace clusteralg
