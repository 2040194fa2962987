#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

using Coeff = std::uint32_t;
using Exponent = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ. Coefficients are always kept in 0..p-1.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  Coeff reduce(std::int64_t a) const;
  Coeff add(Coeff a, Coeff b) const { return a + b >= p_ ? a + b - p_ : a + b; }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff inv(Coeff a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  Exponent max_exponent() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// Precondition: this divides other.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// degrevlex: total degree, ties broken by the smaller exponent in the last
/// differing variable. eliminate_first: exponent of variable 0 first (a block
/// order eliminating it), then degrevlex on the remaining variables.
enum class MonomialOrder { degrevlex, eliminate_first };

/// Negative, zero or positive as a <, ==, > b under the order.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct PolyRing {
  PrimeField field;
  std::size_t nvars;
  MonomialOrder order = MonomialOrder::degrevlex;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p with terms strictly decreasing in the ring's
/// monomial order and no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}
  /// Combines like terms, drops zeros and sorts.
  Polynomial(PolyRing ring, std::vector<Term> terms);

  static Polynomial constant(const PolyRing& ring, std::int64_t c);
  static Polynomial variable(const PolyRing& ring, std::size_t index);
  static Polynomial monomial(const PolyRing& ring, Monomial m, Coeff c = 1);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint64_t degree() const;
  bool is_homogeneous() const;
  /// Coefficient of m (0 when absent).
  Coeff coefficient(const Monomial& m) const;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  /// Same polynomial re-expressed in another ring with the same variables.
  Polynomial with_order(MonomialOrder order) const;
  /// Embeds into a ring with `extra` more variables prepended (index 0..).
  Polynomial with_leading_variables(std::size_t extra, MonomialOrder order) const;
  /// Drops the first `count` variables; all terms must be free of them.
  Polynomial without_leading_variables(std::size_t count, MonomialOrder order) const;

  /// Product that discards every monomial with an exponent above cap.
  Polynomial multiply_capped(const Polynomial& other,
                             std::optional<Exponent> cap) const;
  Polynomial pow(unsigned n) const;

  /// Exact quotient by a nonzero polynomial; throws std::domain_error if
  /// the division leaves a remainder.
  Polynomial divide_exact(const Polynomial& divisor) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

using VariableNamer = std::function<std::string(std::size_t)>;

/// x1..xd, y1..yd naming for the binomial-edge ring in 2d variables.
VariableNamer binomial_edge_names(int d);
/// Names "v1", "v2", ... for a generic ring.
std::string default_variable_name(std::size_t index);

/// One line per term, "coeff * x1^e1 ... yd^ed" (exponent 1 written bare),
/// in descending term order.
std::string to_string(const Polynomial& f, const VariableNamer& names);

// --- binomial-edge ring and factored witnesses ---------------------------

/// The ring k[x_1..x_d, y_1..y_d]; x_i has index i-1 and y_i index d+i-1.
PolyRing binomial_edge_ring(int d, std::uint32_t p,
                            MonomialOrder order = MonomialOrder::degrevlex);
std::size_t x_index(int d, Vertex i);
std::size_t y_index(int d, Vertex i);

/// f_{i,j} = x_i y_j - x_j y_i.
Polynomial minor_polynomial(const PolyRing& ring, int d, Vertex i, Vertex j);

struct Atom {
  enum class Kind { x, y, minor };
  Kind kind;
  Vertex i;
  Vertex j = 0;  // second index for minors, i < j

  static Atom x(Vertex i) { return {Kind::x, i, 0}; }
  static Atom y(Vertex i) { return {Kind::y, i, 0}; }
  static Atom minor(Vertex i, Vertex j);

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// "x3", "y1" or "m(1,2)".
std::string to_string(const Atom& a);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Atom parse_atom(const std::string& text);

/// A product of atoms over k[x_1..x_d, y_1..y_d], kept unexpanded.
struct FactoredWitness {
  int d = 0;
  std::vector<Atom> atoms;

  /// Throws std::invalid_argument if an index falls outside 1..d.
  void validate() const;
  FactoredWitness concat(const FactoredWitness& other) const;
  FactoredWitness repeated(unsigned times) const;
  FactoredWitness without(std::size_t position) const;
};

Polynomial atom_polynomial(const PolyRing& ring, int d, const Atom& a);

/// The product of the atoms over F_p; with a cap, every intermediate
/// monomial with an exponent above the cap is dropped.
Polynomial expand(const FactoredWitness& w, std::uint32_t p,
                  std::optional<Exponent> cap = std::nullopt);

struct FrobeniusOptions {
  /// Refuse instances with d * (p - 1) above this weight.
  std::uint64_t max_weight = 64;
};

/// True iff f^{p-1} is not in m^[p] = (x_i^p, y_i^p), i.e. f^{p-1} keeps a
/// monomial with every exponent at most p-1.
bool witness_power_outside_frobenius(const FactoredWitness& w, std::uint32_t p,
                                     const FrobeniusOptions& options = {});

}  // namespace bei
