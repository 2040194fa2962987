#include "bei/polyfp.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace bei {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
}

Coeff PrimeField::reduce(std::int64_t a) const {
  const auto p = static_cast<std::int64_t>(p_);
  auto r = a % p;
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

// --- Monomial -------------------------------------------------------------

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Exponent Monomial::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  return m;
}

namespace {

int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t first) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = first; i < a.nvars(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > first;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::degrevlex:
      return degrevlex_compare(a, b, 0);
    case MonomialOrder::eliminate_first:
      if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
      return degrevlex_compare(a, b, 1);
  }
  return 0;
}

// --- Polynomial -----------------------------------------------------------

namespace {

void normalize(const PolyRing& ring, std::vector<Term>& terms) {
  const auto order = ring.order;
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, order) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = ring.field.add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms = std::move(merged);
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument("polynomials live in different rings");
}

// a + sign * b by merging the two sorted term lists.
Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a, b);
  const auto& f = a.ring().field;
  const auto order = a.ring().order;
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    int c;
    if (ia == a.terms().end())
      c = -1;
    else if (ib == b.terms().end())
      c = 1;
    else
      c = compare(ia->mono, ib->mono, order);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->mono, subtract ? f.neg(ib->coeff) : ib->coeff});
      ++ib;
    } else {
      const Coeff s = subtract ? f.sub(ia->coeff, ib->coeff) : f.add(ia->coeff, ib->coeff);
      if (s != 0) out.push_back({ia->mono, s});
      ++ia;
      ++ib;
    }
  }
  return Polynomial(a.ring(), std::move(out));
}

}  // namespace

Polynomial::Polynomial(PolyRing ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.mono.nvars() != ring_.nvars)
      throw std::invalid_argument("monomial has wrong number of variables");
  normalize(ring_, terms_);
}

Polynomial Polynomial::constant(const PolyRing& ring, std::int64_t c) {
  return Polynomial(ring, {{Monomial(ring.nvars), ring.field.reduce(c)}});
}

Polynomial Polynomial::variable(const PolyRing& ring, std::size_t index) {
  if (index >= ring.nvars) throw std::invalid_argument("variable index out of range");
  Monomial m(ring.nvars);
  m[index] = 1;
  return Polynomial(ring, {{std::move(m), 1}});
}

Polynomial Polynomial::monomial(const PolyRing& ring, Monomial m, Coeff c) {
  return Polynomial(ring, {{std::move(m), ring.field.reduce(c)}});
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field.inv(leading_term().coeff));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c = ring_.field.reduce(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ring_.field.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  c = ring_.field.reduce(c);
  Polynomial r(ring_);
  if (c == 0) return r;
  // multiplying by a monomial preserves the order of terms
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_.field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  PolyRing ring = ring_;
  ring.order = order;
  return Polynomial(ring, terms_);
}

Polynomial Polynomial::with_leading_variables(std::size_t extra,
                                              MonomialOrder order) const {
  PolyRing ring{ring_.field, ring_.nvars + extra, order};
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> e(extra, 0);
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial Polynomial::without_leading_variables(std::size_t count,
                                                 MonomialOrder order) const {
  if (count > ring_.nvars) throw std::invalid_argument("too many variables dropped");
  PolyRing ring{ring_.field, ring_.nvars - count, order};
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    const auto& e = t.mono.exponents();
    for (std::size_t i = 0; i < count; ++i)
      if (e[i] != 0)
        throw std::invalid_argument("polynomial involves a dropped variable");
    terms.push_back({Monomial(std::vector<Exponent>(e.begin() + static_cast<std::ptrdiff_t>(count), e.end())),
                     t.coeff});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial Polynomial::multiply_capped(const Polynomial& other,
                                       std::optional<Exponent> cap) const {
  require_same_ring(*this, other);
  std::vector<Term> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Monomial m = a.mono * b.mono;
      if (cap && m.max_exponent() > *cap) continue;
      terms.push_back({std::move(m), ring_.field.mul(a.coeff, b.coeff)});
    }
  }
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  require_same_ring(*this, divisor);
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& lt = divisor.leading_term();
  const Coeff lead_inv = ring_.field.inv(lt.coeff);
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto& r = rem.leading_term();
    if (!lt.mono.divides(r.mono))
      throw std::domain_error("polynomial division is not exact");
    Term q{lt.mono.quotient_of(r.mono), ring_.field.mul(r.coeff, lead_inv)};
    rem = rem - divisor.times_term(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial(ring_, std::move(quotient));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return a.multiply_capped(b, std::nullopt);
}

VariableNamer binomial_edge_names(int d) {
  return [d](std::size_t index) {
    const auto di = static_cast<std::size_t>(d);
    return index < di ? "x" + std::to_string(index + 1)
                      : "y" + std::to_string(index - di + 1);
  };
}

std::string default_variable_name(std::size_t index) {
  return "v" + std::to_string(index + 1);
}

std::string to_string(const Polynomial& f, const VariableNamer& names) {
  std::ostringstream os;
  for (const auto& t : f.terms()) {
    os << t.coeff;
    if (!t.mono.is_one()) {
      os << " *";
      for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
        if (t.mono[i] == 0) continue;
        os << ' ' << names(i);
        if (t.mono[i] > 1) os << '^' << t.mono[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

// --- binomial-edge ring ---------------------------------------------------

PolyRing binomial_edge_ring(int d, std::uint32_t p, MonomialOrder order) {
  if (d < 1) throw std::invalid_argument("ring needs d >= 1");
  return PolyRing{PrimeField(p), static_cast<std::size_t>(2 * d), order};
}

std::size_t x_index(int d, Vertex i) {
  (void)d;
  return static_cast<std::size_t>(i - 1);
}

std::size_t y_index(int d, Vertex i) { return static_cast<std::size_t>(d + i - 1); }

Polynomial minor_polynomial(const PolyRing& ring, int d, Vertex i, Vertex j) {
  Monomial a(ring.nvars), b(ring.nvars);
  a[x_index(d, i)] = 1;
  a[y_index(d, j)] = 1;
  b[x_index(d, j)] = 1;
  b[y_index(d, i)] = 1;
  return Polynomial(ring, {{std::move(a), 1}, {std::move(b), ring.field.neg(1)}});
}

Atom Atom::minor(Vertex i, Vertex j) {
  if (i == j) throw std::invalid_argument("minor needs two distinct indices");
  if (i > j) std::swap(i, j);
  return {Kind::minor, i, j};
}

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::x:
      return "x" + std::to_string(a.i);
    case Atom::Kind::y:
      return "y" + std::to_string(a.i);
    case Atom::Kind::minor:
      return "m(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
  }
  return {};
}

Atom parse_atom(const std::string& text) {
  static const std::regex var_re(R"(\s*([xy])\s*([0-9]+)\s*)");
  static const std::regex minor_re(R"(\s*m\s*\(\s*([0-9]+)\s*,\s*([0-9]+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, var_re)) {
    const int i = std::stoi(m[2]);
    return m[1] == "x" ? Atom::x(i) : Atom::y(i);
  }
  if (std::regex_match(text, m, minor_re))
    return Atom::minor(std::stoi(m[1]), std::stoi(m[2]));
  throw std::invalid_argument("cannot parse atom '" + text + "'");
}

void FactoredWitness::validate() const {
  if (d < 1) throw std::invalid_argument("witness needs d >= 1");
  for (const auto& a : atoms) {
    const bool ok = a.i >= 1 && a.i <= d &&
                    (a.kind != Atom::Kind::minor || (a.j > a.i && a.j <= d));
    if (!ok) throw std::invalid_argument("atom " + to_string(a) + " out of range");
  }
}

FactoredWitness FactoredWitness::concat(const FactoredWitness& other) const {
  if (other.d != d) throw std::invalid_argument("witnesses over different rings");
  FactoredWitness w = *this;
  w.atoms.insert(w.atoms.end(), other.atoms.begin(), other.atoms.end());
  return w;
}

FactoredWitness FactoredWitness::repeated(unsigned times) const {
  FactoredWitness w{d, {}};
  for (unsigned k = 0; k < times; ++k) w.atoms.insert(w.atoms.end(), atoms.begin(), atoms.end());
  return w;
}

FactoredWitness FactoredWitness::without(std::size_t position) const {
  if (position >= atoms.size()) throw std::invalid_argument("no factor at that position");
  FactoredWitness w = *this;
  w.atoms.erase(w.atoms.begin() + static_cast<std::ptrdiff_t>(position));
  return w;
}

Polynomial atom_polynomial(const PolyRing& ring, int d, const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::x:
      return Polynomial::variable(ring, x_index(d, a.i));
    case Atom::Kind::y:
      return Polynomial::variable(ring, y_index(d, a.i));
    case Atom::Kind::minor:
      return minor_polynomial(ring, d, a.i, a.j);
  }
  throw std::logic_error("unknown atom kind");
}

Polynomial expand(const FactoredWitness& w, std::uint32_t p, std::optional<Exponent> cap) {
  w.validate();
  const PolyRing ring = binomial_edge_ring(w.d, p);
  Polynomial f = Polynomial::constant(ring, 1);
  for (const auto& a : w.atoms) {
    f = f.multiply_capped(atom_polynomial(ring, w.d, a), cap);
    if (f.is_zero()) break;
  }
  return f;
}

bool witness_power_outside_frobenius(const FactoredWitness& w, std::uint32_t p,
                                     const FrobeniusOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  if (static_cast<std::uint64_t>(w.d) * (p - 1) > options.max_weight)
    throw BudgetExceeded("Frobenius check limited to d*(p-1) <= " +
                         std::to_string(options.max_weight));
  const Exponent cap = p - 1;
  // pruning is sound: exponents only grow under multiplication
  const Polynomial f = expand(w, p, cap);
  Polynomial power = Polynomial::constant(f.ring(), 1);
  for (std::uint32_t k = 0; k + 1 < p && !power.is_zero(); ++k)
    power = power.multiply_capped(f, cap);
  return !power.is_zero();
}

}  // namespace bei
