#pragma once

// Seeds (cluster, tropical coefficients, exchange matrix) and mutation.
//
// Directions and slots are 0-based inside the library; every external
// format (JSON, CLI, messages) is 1-based.

#include "clusteralg/int_matrix.hpp"
#include "clusteralg/laurent.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clusteralg {

enum class CoefficientMode { principal, trivial };

const char* to_string(CoefficientMode mode);
CoefficientMode parse_mode(std::string_view text);

/// A mutation sequence from the root seed.
using Path = std::vector<std::size_t>;

struct SkewSymmetrizer {
  std::vector<std::int64_t> diag;
  bool operator==(const SkewSymmetrizer&) const = default;
};

/// Minimal-trace positive diagonal D with D*B skew-symmetric.
/// Throws NotSkewSymmetrizable.
SkewSymmetrizer find_skew_symmetrizer(const IntMatrix& bmat);

/// Matrix mutation in direction k.
IntMatrix mutate_matrix(const IntMatrix& bmat, std::size_t k);
IntMatrix mutate_matrix_along(IntMatrix bmat, std::span<const std::size_t> path);

/// A labeled seed. Cluster entries are expansions in the root cluster; the
/// seed remembers the root exchange matrix and the (reduced) mutation path
/// that produced it, so any two seeds of one pattern can be related.
class Seed {
 public:
  /// Root seed for an exchange matrix. Validates skew-symmetrizability.
  static Seed initial(const IntMatrix& bmat, CoefficientMode mode);

  std::size_t rank() const { return bmat_.rows(); }
  CoefficientMode mode() const { return mode_; }
  const std::vector<LaurentPoly>& cluster() const { return cluster_; }
  const std::vector<TropicalMonomial>& coeffs() const { return coeffs_; }
  const IntMatrix& bmat() const { return bmat_; }
  const Path& path() const { return path_; }
  const IntMatrix& root_bmat() const { return *root_bmat_; }

  /// Slot holding `x`, if any.
  std::optional<std::size_t> slot_of(const LaurentPoly& x) const;

  /// Cluster monomial x^v for v in N^n.
  LaurentPoly monomial(std::span<const std::int64_t> v) const;

  /// Equality of (cluster, coeffs, bmat, mode); the path is provenance only.
  bool operator==(const Seed& o) const;

  friend Seed mutate_seed(const Seed& s, std::size_t k);
  friend Seed relabel(const Seed& s, std::span<const std::size_t> sigma);

 private:
  Seed() = default;

  std::vector<LaurentPoly> cluster_;
  std::vector<TropicalMonomial> coeffs_;
  IntMatrix bmat_;
  CoefficientMode mode_ = CoefficientMode::principal;
  Path path_;
  std::shared_ptr<const IntMatrix> root_bmat_;
};

/// Mutation in direction k. Propagates InexactDivision (never expected).
Seed mutate_seed(const Seed& s, std::size_t k);
Seed mutate_along(Seed s, std::span<const std::size_t> path);

/// Slot i of the result holds slot sigma[i] of s (cluster, coefficient, and
/// rows/columns of B). The result is the root of its own pattern.
Seed relabel(const Seed& s, std::span<const std::size_t> sigma);

/// sigma with x_i = t.x_{sigma(i)}, y_i = t.y_{sigma(i)}, b_ij = t.b_{sigma(i)sigma(j)}.
std::optional<std::vector<std::size_t>> seeds_equivalent(const Seed& s, const Seed& t);

/// Equal iff the seeds are equivalent.
std::string canonical_key(const Seed& s);
/// Equal iff the seeds are identical as labeled seeds.
std::string labeled_key(const Seed& s);

/// Expansions of `of`'s cluster variables in the cluster of `wrt`
/// (slot-aligned with `of`). Both seeds must share a root.
std::vector<LaurentPoly> expand_in(const Seed& of, const Seed& wrt,
                                   CoefficientMode mode = CoefficientMode::trivial);
/// expand_in for many seeds at once; shared path prefixes are mutated once.
std::vector<std::vector<LaurentPoly>> expand_many(std::span<const Seed* const> of, const Seed& wrt,
                                                  CoefficientMode mode = CoefficientMode::trivial);

/// Append k to a path, cancelling an immediate repeat.
Path extend_path(Path p, std::size_t k);

}  // namespace clusteralg
