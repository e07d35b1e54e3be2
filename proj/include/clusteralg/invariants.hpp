#pragma once

// Denominator vectors, g-vectors and the G/D/R matrices of a seed.

#include "clusteralg/int_matrix.hpp"
#include "clusteralg/laurent.hpp"
#include "clusteralg/seed.hpp"

#include <span>

namespace clusteralg {

struct DVector {
  IntVector entries;
  bool operator==(const DVector&) const = default;
};

struct GVector {
  IntVector entries;
  bool operator==(const GVector&) const = default;
};

/// d_j = -(minimal exponent of x_j). Throws ZeroPolynomial.
DVector dvector_direct(const LaurentPoly& x);

/// Columns are the d-vectors of the seed's cluster w.r.t. the root cluster.
IntMatrix dmatrix_direct(const Seed& s);

/// D-matrix at the end of `path`, computed only from the recurrence that
/// starts at -I and co-mutates `bmat` (the root exchange matrix).
IntMatrix dmatrix_recurrence(std::span<const std::size_t> path, const IntMatrix& bmat);

/// x-exponent of the unique y-free term of a principal-coefficient expansion.
/// Throws MalformedExpansion unless that term exists, is unique and has coefficient 1.
GVector gvector(const LaurentPoly& x);

/// Columns are g-vectors. Requires principal mode. Checks |det| = 1.
IntMatrix gmatrix(const Seed& s);

/// R with G_s R = G_t.
IntMatrix rmatrix(const Seed& s, const Seed& t);

/// G_s v for v in N^n.
GVector monomial_gvector(const Seed& s, std::span<const std::int64_t> v);

/// True iff every term of x_s^v, expanded in the cluster of `target`, has a
/// negative x-exponent. Rejects (PreconditionViolated) monomials whose
/// support lies inside the target cluster.
bool proper_laurent_check(const Seed& s, std::span<const std::int64_t> v, const Seed& target);

/// All v in N^n with 1 <= sum(v) <= max_degree, in lexicographic order.
std::vector<IntVector> exponent_vectors(std::size_t n, int max_degree);

}  // namespace clusteralg
