#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bei/polyfp.hpp"
#include "bei/primes.hpp"

namespace bei {

struct GroebnerOptions {
  /// S-pairs reduced before giving up with BudgetExceeded.
  std::size_t max_pairs = 200'000;
  /// Largest intermediate basis tolerated.
  std::size_t max_basis = 20'000;
  /// For homogeneous input: ignore S-pairs whose lcm has larger degree. The
  /// result is then a Gröbner basis only up to that degree, which decides
  /// membership of homogeneous polynomials of degree <= the bound.
  std::optional<std::uint64_t> degree_bound;
};

/// Reduced Gröbner basis (monic, sorted by ascending leading monomial) via
/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria. Deterministic for a given input order.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const GroebnerOptions& options = {});

/// Full division remainder of f by the basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// An ideal given by generators with a lazily computed Gröbner basis.
class OracleIdeal {
 public:
  OracleIdeal(PolyRing ring, std::vector<Polynomial> generators,
              GroebnerOptions options = {});

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& basis() const;
  bool contains(const Polynomial& f) const;
  bool is_unit() const;

 private:
  PolyRing ring_;
  std::vector<Polynomial> generators_;
  GroebnerOptions options_;
  mutable std::optional<std::vector<Polynomial>> basis_;
};

bool ideals_equal(const OracleIdeal& a, const OracleIdeal& b);

/// Generators of I^n: all products of n generators (with repetition).
OracleIdeal ideal_power(const OracleIdeal& ideal, unsigned n);

/// I ∩ J by eliminating t from t*I + (1-t)*J.
OracleIdeal intersect(const OracleIdeal& a, const OracleIdeal& b);

/// I : J as the intersection of I : g over generators g of J, with
/// I : g = (I ∩ (g)) / g.
OracleIdeal colon(const OracleIdeal& a, const OracleIdeal& b);

/// The ideal generated by p-th powers of the generators.
OracleIdeal frobenius_bracket(const OracleIdeal& ideal, std::uint32_t p);

/// Generators of p_S in k[x_1..x_d, y_1..y_d]: x_s, y_s for s in S and the
/// minors f_{i,j} for i < j in a common component block.
std::vector<Polynomial> prime_generators(const PolyRing& ring, int d,
                                         const MinimalPrime& prime);

/// Largest n <= max_n with f in P^n (0 when f is not in P). P^n is generated
/// by n-fold products of the given generators. Homogeneous inputs use a
/// degree-truncated basis at deg f.
int power_membership_order(const Polynomial& f,
                           const std::vector<Polynomial>& prime_gens, int max_n,
                           GroebnerOptions options = {});

/// The identity (J^(a))^[p] : J^(b) = ∩_i (q_i^(a))^[p] : q_i^(b) for J the
/// intersection of primes generated by variables, where symbolic powers are
/// ordinary powers. Each prime is a list of variable indices.
struct ColonIdentityReport {
  bool holds = false;
  std::size_t lhs_generators = 0;
  std::size_t rhs_generators = 0;
};

ColonIdentityReport check_colon_identity(
    std::size_t nvars, const std::vector<std::vector<std::size_t>>& primes,
    std::uint32_t p, unsigned a, unsigned b);

}  // namespace bei
