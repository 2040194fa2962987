#include "bei/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace bei {

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Index of the first basis element whose leading monomial divides m.
const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& basis) {
  for (const Polynomial* g : basis)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<const Polynomial*>& basis) {
  const auto& field = f.ring().field;
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    if (const Polynomial* g = find_reducer(lt.mono, basis)) {
      const Coeff c = field.mul(lt.coeff, field.inv(g->leading_term().coeff));
      p = p - g->times_term(g->leading_monomial().quotient_of(lt.mono), c);
    } else {
      remainder.push_back(lt);
      p = p - Polynomial(f.ring(), {lt});
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  const auto& field = f.ring().field;
  const Polynomial a = f.times_term(f.leading_monomial().quotient_of(lcm),
                                    field.inv(f.leading_term().coeff));
  const Polynomial b = g.times_term(g.leading_monomial().quotient_of(lcm),
                                    field.inv(g.leading_term().coeff));
  return a - b;
}

class Buchberger {
 public:
  Buchberger(const PolyRing& ring, const GroebnerOptions& options)
      : ring_(ring), options_(options) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    for (const auto& g : generators) {
      if (!(g.ring() == ring_))
        throw std::invalid_argument("generators live in different rings");
      if (options_.degree_bound && !g.is_homogeneous())
        throw std::invalid_argument("degree-truncated bases need homogeneous input");
    }
    for (const auto& g : generators) {
      Polynomial h = reduce_full(g, active_basis()).monic();
      if (!h.is_zero()) add(std::move(h));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > options_.max_pairs)
        throw BudgetExceeded("Gröbner basis exceeded " +
                             std::to_string(options_.max_pairs) + " S-pairs");
      const Pair pair = take_pair();
      Polynomial h = reduce_full(s_polynomial(polys_[pair.i], polys_[pair.j], pair.lcm),
                                 active_basis())
                         .monic();
      if (!h.is_zero()) add(std::move(h));
    }
    return interreduce();
  }

 private:
  std::vector<const Polynomial*> active_basis() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  bool within_bound(const Monomial& lcm) const {
    return !options_.degree_bound || lcm.degree() <= *options_.degree_bound;
  }

  Pair take_pair() {
    // normal strategy: smallest lcm first, ties by position
    auto best = pairs_.begin();
    for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
      const int c = compare(it->lcm, best->lcm, ring_.order);
      if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
    }
    Pair p = *best;
    pairs_.erase(best);
    return p;
  }

  // Gebauer-Moeller update for a new element h.
  void add(Polynomial h) {
    if (polys_.size() >= options_.max_basis)
      throw BudgetExceeded("Gröbner basis exceeded " +
                           std::to_string(options_.max_basis) + " elements");
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) candidates.push_back({k, hi, polys_[k].leading_monomial().lcm(lh)});

    // chain criterion among the new pairs; keep one pair per lcm
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& pa = candidates[a];
      const bool coprime = polys_[pa.i].leading_monomial().coprime(lh);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
          if (a == b) continue;
          const auto& pb = candidates[b];
          if (!pb.lcm.divides(pa.lcm)) continue;
          // strict divisibility, or equal lcm with an earlier representative
          redundant = !(pb.lcm == pa.lcm) || b < a;
        }
      }
      if (!redundant) kept.push_back(pa);
    }
    // drop pairs whose leading monomials are coprime (product criterion),
    // and any pair that shares an lcm with a coprime one
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (polys_[p.i].leading_monomial().coprime(lh)) continue;
      bool shadowed = false;
      for (const auto& q : kept)
        if (q.lcm == p.lcm && polys_[q.i].leading_monomial().coprime(lh)) shadowed = true;
      if (!shadowed) fresh.push_back(p);
    }

    // old pairs made redundant by h
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial l1 = polys_[p.i].leading_monomial().lcm(lh);
      const Monomial l2 = polys_[p.j].leading_monomial().lcm(lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    for (auto& p : fresh)
      if (within_bound(p.lcm)) pairs_.push_back(std::move(p));

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
  }

  std::vector<Polynomial> interreduce() const {
    std::vector<const Polynomial*> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(&polys_[k]);
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(minimal[m]);
      // keep the leading term, reduce the tail
      const Term lt = minimal[k]->leading_term();
      Polynomial tail = *minimal[k] - Polynomial(ring_, {lt});
      Polynomial r = Polynomial(ring_, {lt}) + reduce_full(tail, others);
      reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), ring_.order) < 0;
    });
    return reduced;
  }

  PolyRing ring_;
  GroebnerOptions options_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::vector<const Polynomial*> pointers(const std::vector<Polynomial>& v) {
  std::vector<const Polynomial*> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(&p);
  return out;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const GroebnerOptions& options) {
  if (generators.empty()) return {};
  return Buchberger(generators.front().ring(), options).run(generators);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return reduce_full(f, pointers(basis));
}

OracleIdeal::OracleIdeal(PolyRing ring, std::vector<Polynomial> generators,
                         GroebnerOptions options)
    : ring_(std::move(ring)), options_(std::move(options)) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw std::invalid_argument("generator in a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& OracleIdeal::basis() const {
  if (!basis_) basis_ = groebner_basis(generators_, options_);
  return *basis_;
}

bool OracleIdeal::contains(const Polynomial& f) const {
  return normal_form(f, basis()).is_zero();
}

bool OracleIdeal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().leading_monomial().is_one();
}

bool ideals_equal(const OracleIdeal& a, const OracleIdeal& b) {
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return b.contains(g); }) &&
         std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& g) { return a.contains(g); });
}

namespace {

void multisets(const std::vector<Polynomial>& gens, unsigned n, std::size_t start,
               const Polynomial& acc, std::vector<Polynomial>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t k = start; k < gens.size(); ++k) multisets(gens, n - 1, k, acc * gens[k], out);
}

std::vector<Polynomial> power_generators(const PolyRing& ring,
                                         const std::vector<Polynomial>& gens, unsigned n) {
  std::vector<Polynomial> out;
  multisets(gens, n, 0, Polynomial::constant(ring, 1), out);
  return out;
}

}  // namespace

OracleIdeal ideal_power(const OracleIdeal& ideal, unsigned n) {
  return OracleIdeal(ideal.ring(), power_generators(ideal.ring(), ideal.generators(), n));
}

OracleIdeal intersect(const OracleIdeal& a, const OracleIdeal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ideals in different rings");
  const auto order = a.ring().order;
  std::vector<Polynomial> gens;
  if (a.generators().empty() || b.generators().empty())
    return OracleIdeal(a.ring(), {});
  const PolyRing big{a.ring().field, a.ring().nvars + 1, MonomialOrder::eliminate_first};
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  for (const auto& g : a.generators())
    gens.push_back(t * g.with_leading_variables(1, MonomialOrder::eliminate_first));
  for (const auto& g : b.generators())
    gens.push_back(one_minus_t * g.with_leading_variables(1, MonomialOrder::eliminate_first));
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(gens))
    if (g.leading_monomial()[0] == 0) out.push_back(g.without_leading_variables(1, order));
  return OracleIdeal(a.ring(), groebner_basis(out));
}

OracleIdeal colon(const OracleIdeal& a, const OracleIdeal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("ideals in different rings");
  std::optional<OracleIdeal> result;
  for (const auto& g : b.generators()) {
    const OracleIdeal principal(a.ring(), {g});
    std::vector<Polynomial> quotients;
    const OracleIdeal meet = intersect(a, principal);
    for (const auto& h : meet.generators())
      quotients.push_back(h.divide_exact(g));
    OracleIdeal part(a.ring(), groebner_basis(quotients));
    result = result ? intersect(*result, part) : part;
  }
  // I : 0 is the whole ring
  if (!result) return OracleIdeal(a.ring(), {Polynomial::constant(a.ring(), 1)});
  return *result;
}

OracleIdeal frobenius_bracket(const OracleIdeal& ideal, std::uint32_t p) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(p));
  return OracleIdeal(ideal.ring(), std::move(gens));
}

std::vector<Polynomial> prime_generators(const PolyRing& ring, int d,
                                         const MinimalPrime& prime) {
  std::vector<Polynomial> gens;
  for (Vertex s : prime.cut_set) {
    gens.push_back(Polynomial::variable(ring, x_index(d, s)));
    gens.push_back(Polynomial::variable(ring, y_index(d, s)));
  }
  for (const auto& block : prime.components)
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b)
        gens.push_back(minor_polynomial(ring, d, block[a], block[b]));
  return gens;
}

int power_membership_order(const Polynomial& f, const std::vector<Polynomial>& prime_gens,
                           int max_n, GroebnerOptions options) {
  if (f.is_zero()) return max_n;
  const PolyRing& ring = f.ring();
  const bool homogeneous =
      f.is_homogeneous() &&
      std::all_of(prime_gens.begin(), prime_gens.end(),
                  [](const Polynomial& g) { return g.is_homogeneous(); });
  if (homogeneous) options.degree_bound = f.degree();
  int order = 0;
  for (int n = 1; n <= max_n; ++n) {
    auto gens = power_generators(ring, prime_gens, static_cast<unsigned>(n));
    if (homogeneous) {
      // generators above deg f cannot contribute to a degree-deg(f) element
      std::erase_if(gens, [&](const Polynomial& g) { return g.degree() > f.degree(); });
      if (gens.empty()) break;
    }
    if (!normal_form(f, groebner_basis(gens, options)).is_zero()) break;
    order = n;
  }
  return order;
}

ColonIdentityReport check_colon_identity(std::size_t nvars,
                                         const std::vector<std::vector<std::size_t>>& primes,
                                         std::uint32_t p, unsigned a, unsigned b) {
  if (primes.empty()) throw std::invalid_argument("need at least one prime");
  const PolyRing ring{PrimeField(p), nvars, MonomialOrder::degrevlex};
  std::vector<OracleIdeal> qs;
  for (const auto& vars : primes) {
    std::vector<Polynomial> gens;
    for (std::size_t v : vars) gens.push_back(Polynomial::variable(ring, v));
    qs.emplace_back(ring, std::move(gens));
  }
  // primes generated by variables: symbolic powers are ordinary powers
  auto symbolic = [&](unsigned n) {
    OracleIdeal j = ideal_power(qs.front(), n);
    for (std::size_t k = 1; k < qs.size(); ++k) j = intersect(j, ideal_power(qs[k], n));
    return j;
  };
  const OracleIdeal lhs = colon(frobenius_bracket(symbolic(a), p), symbolic(b));
  std::optional<OracleIdeal> rhs;
  for (const auto& q : qs) {
    OracleIdeal part = colon(frobenius_bracket(ideal_power(q, a), p), ideal_power(q, b));
    rhs = rhs ? intersect(*rhs, part) : part;
  }
  ColonIdentityReport report;
  report.holds = ideals_equal(lhs, *rhs);
  report.lhs_generators = lhs.basis().size();
  report.rhs_generators = rhs->basis().size();
  return report;
}

}  // namespace bei
