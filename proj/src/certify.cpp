#include "bei/certify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bei {

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::symbolic_f_split ? "symbolic_f_split" : "strong_f_regular";
}

std::string to_string(Verdict verdict) { return verdict == Verdict::pass ? "pass" : "fail"; }

FactoredWitness canonical_witness(int d) {
  if (d < 2) throw std::invalid_argument("canonical witness needs d >= 2");
  FactoredWitness w{d, {}};
  w.atoms.push_back(Atom::y(1));
  for (Vertex i = 1; i < d; ++i) w.atoms.push_back(Atom::minor(i, i + 1));
  w.atoms.push_back(Atom::x(d));
  return w;
}

std::optional<std::size_t> canonical_position(int d, const Atom& atom) {
  const auto w = canonical_witness(d);
  const auto it = std::find(w.atoms.begin(), w.atoms.end(), atom);
  if (it == w.atoms.end()) return std::nullopt;
  return static_cast<std::size_t>(it - w.atoms.begin());
}

namespace {

// block[v] = index of v's component, -1 for v in S, -2 for v outside [d].
class PrimeView {
 public:
  explicit PrimeView(const MinimalPrime& p) {
    Vertex top = 0;
    for (Vertex v : p.cut_set) top = std::max(top, v);
    for (const auto& b : p.components)
      for (Vertex v : b) top = std::max(top, v);
    block_.assign(static_cast<std::size_t>(top) + 1, -2);
    for (Vertex v : p.cut_set) block_[v] = -1;
    for (std::size_t k = 0; k < p.components.size(); ++k)
      for (Vertex v : p.components[k]) block_[v] = static_cast<int>(k);
  }

  int order(const Atom& a) const {
    if (a.kind != Atom::Kind::minor) return in_s(a.i) ? 1 : 0;
    const int in = (in_s(a.i) ? 1 : 0) + (in_s(a.j) ? 1 : 0);
    if (in > 0) return in;
    const int bi = at(a.i), bj = at(a.j);
    return bi >= 0 && bi == bj ? 1 : 0;
  }

  int order(const FactoredWitness& w) const {
    int total = 0;
    for (const auto& a : w.atoms) total += order(a);
    return total;
  }

 private:
  int at(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < block_.size() ? block_[v] : -2;
  }
  bool in_s(Vertex v) const { return at(v) == -1; }

  std::vector<int> block_;
};

struct Evaluation {
  std::vector<PrimeBound> per_prime;
  std::optional<std::size_t> blocking;
  int deficit = 0;
};

Evaluation evaluate(const FactoredWitness& counted, const std::vector<MinimalPrime>& primes,
                    int slack) {
  Evaluation e;
  for (const auto& q : primes) {
    PrimeBound pb{q, q.height - slack, PrimeView(q).order(counted)};
    if (!e.blocking && pb.bound < pb.required) {
      e.blocking = e.per_prime.size();
      e.deficit = pb.required - pb.bound;
    }
    e.per_prime.push_back(std::move(pb));
  }
  return e;
}

// Shared driver: `slack` is 0 for symbolic F-splitness, 1 for strong
// F-regularity, where the cofactor is left out of the count.
Certificate certify(const Graph& g, std::uint32_t p, CertificateKind kind,
                    std::optional<std::size_t> cofactor, const CertifyOptions& options) {
  const PrimeField field(p);  // rejects non-primes
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  const int d = g.order();

  Certificate cert;
  cert.kind = kind;
  cert.p = p;
  cert.witness = canonical_witness(d);
  cert.cofactor_index = cofactor;
  cert.labeling_used = Labeling::identity(d);
  if (cofactor && *cofactor >= cert.witness.atoms.size())
    throw std::invalid_argument("cofactor position " + std::to_string(*cofactor) +
                                " outside the witness");
  if (kind == CertificateKind::strong_f_regular) {
    cert.assumptions = {
        "unverified: the symbolic Rees algebra localized at the cofactor " +
            to_string(cert.witness.atoms[*cofactor]) + " is strongly F-regular",
        "unverified: the symbolic Rees algebra is Noetherian",
    };
  }

  const auto primes = enumerate_minimal_primes(g, options.max_vertices);
  const FactoredWitness counted = cofactor ? cert.witness.without(*cofactor) : cert.witness;
  const int slack = kind == CertificateKind::strong_f_regular ? 1 : 0;
  cert.frobenius_ok = witness_power_outside_frobenius(cert.witness, p, options.frobenius);

  auto attempt = [&](const Labeling& pi) {
    ++cert.labelings_tried;
    return evaluate(counted, relabel_primes(primes, pi), slack);
  };
  auto accept = [&](Evaluation e, const Labeling& pi) {
    cert.per_prime = std::move(e.per_prime);
    cert.blocking = e.blocking;
    cert.deficit = e.deficit;
    cert.labeling_used = pi;
    cert.verdict = cert.frobenius_ok && !cert.blocking ? Verdict::pass : Verdict::fail;
  };

  const Labeling id = Labeling::identity(d);
  Evaluation first = attempt(id);
  const bool identity_passes = !first.blocking;
  accept(std::move(first), id);
  // relabeling cannot change f, so a failed Frobenius check is final
  if (identity_passes || !cert.frobenius_ok || !options.search_labelings) return cert;

  std::vector<Labeling> tried{id};
  auto seen = [&](const Labeling& pi) {
    return std::find(tried.begin(), tried.end(), pi) != tried.end();
  };
  for (const auto& hint : options.hint_labelings) {
    if (!hint.is_valid_for(d))
      throw std::invalid_argument("hint labeling is not a permutation of 1.." + std::to_string(d));
    if (seen(hint)) continue;
    if (cert.labelings_tried >= options.labeling_budget) return cert;
    tried.push_back(hint);
    Evaluation e = attempt(hint);
    if (!e.blocking) {
      accept(std::move(e), hint);
      return cert;
    }
  }
  Labeling pi = id;
  while (std::next_permutation(pi.perm.begin(), pi.perm.end())) {
    if (cert.labelings_tried >= options.labeling_budget) break;
    if (seen(pi)) continue;
    Evaluation e = attempt(pi);
    if (!e.blocking) {
      accept(std::move(e), pi);
      break;
    }
  }
  return cert;
}

}  // namespace

int factor_order(const Atom& atom, const MinimalPrime& prime) {
  return PrimeView(prime).order(atom);
}

int order_lower_bound(const FactoredWitness& w, const MinimalPrime& prime) {
  return PrimeView(prime).order(w);
}

Certificate certify_symbolic_fsplit(const Graph& g, std::uint32_t p,
                                    const CertifyOptions& options) {
  return certify(g, p, CertificateKind::symbolic_f_split, std::nullopt, options);
}

Certificate certify_strong_freg(const Graph& g, std::uint32_t p, std::size_t cofactor_index,
                                const CertifyOptions& options) {
  return certify(g, p, CertificateKind::strong_f_regular, cofactor_index, options);
}

// --- proof decompositions -------------------------------------------------

Graph instance_graph(const FamilyInstance& instance) {
  return std::visit(
      [](const auto& in) -> Graph {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, MultipartiteInstance>)
          return complete_multipartite(in.sizes);
        else if constexpr (std::is_same_v<T, CaterpillarInstance>)
          return caterpillar(in.spec);
        else
          return join_of_completes(in.n0, in.parts);
      },
      instance);
}

namespace {

// Product of f_{j,j+1} for j = from .. to-1.
void push_chain(std::vector<Atom>& out, Vertex from, Vertex to) {
  for (Vertex j = from; j < to; ++j) out.push_back(Atom::minor(j, j + 1));
}

std::pair<FactoredWitness, int> multipartite_g(int d, const VertexSet& s) {
  const int m = static_cast<int>(s.size());
  std::vector<Atom> g;
  g.push_back(s.front() == 1 ? Atom::y(1) : Atom::minor(s.front() - 1, s.front()));
  for (int i = 0; i + 1 < m; ++i) {
    g.push_back(Atom::minor(s[i], s[i] + 1));
    if (s[i] + 1 < s[i + 1]) g.push_back(Atom::minor(s[i + 1] - 1, s[i + 1]));
  }
  g.push_back(s.back() == d ? Atom::x(d) : Atom::minor(s.back(), s.back() + 1));
  return {FactoredWitness{d, std::move(g)}, 2 * m};
}

std::pair<FactoredWitness, int> caterpillar_g(const CaterpillarSpec& spec, int d,
                                              const VertexSet& s) {
  // legs hanging off each spine label
  std::vector<int> legs_at(static_cast<std::size_t>(d) + 1, -1);
  for (int k = 1; k <= spec.spine_length(); ++k)
    legs_at[spec.spine_label(k)] = spec.legs[k - 1];
  for (Vertex v : s)
    if (legs_at[v] < 0 || v == 1 || v == d)
      throw std::logic_error("cut set vertex " + std::to_string(v) +
                             " is not an interior spine vertex");

  const int m = static_cast<int>(s.size());
  std::vector<Atom> g;
  push_chain(g, 1, s.front() - 1);  // g_0
  int delta_sum = 0, legs_sum = 0;
  for (int i = 0; i + 1 < m; ++i) {
    const int t = s[i] + legs_at[s[i]] + 1;
    const int l = s[i + 1] - t;
    if (l >= 2) push_chain(g, t, t + l - 1);  // g_i
    delta_sum += l >= 1 ? 1 : 0;
  }
  const int tail = s.back() + legs_at[s.back()] + 1;
  push_chain(g, tail, d);  // g_m
  for (Vertex v : s) {
    g.push_back(Atom::minor(v - 1, v));
    g.push_back(Atom::minor(v, v + 1));
    legs_sum += legs_at[v];
  }
  return {FactoredWitness{d, std::move(g)}, m + d - (2 + legs_sum + delta_sum)};
}

std::pair<FactoredWitness, int> join_of_completes_g(int n0, const std::vector<int>& parts,
                                                    int d) {
  std::vector<Atom> g{Atom::x(1)};
  push_chain(g, 1, n0);
  int u = n0;
  for (int n : parts) {
    push_chain(g, u + 1, u + n);
    u += n;
  }
  g.push_back(Atom::minor(n0, n0 + 1));
  const int m = static_cast<int>(parts.size());
  return {FactoredWitness{d, std::move(g)}, n0 + d - m};
}

}  // namespace

ProofDecomposition proof_decomposition(const FamilyInstance& instance, const VertexSet& s) {
  const Graph g = instance_graph(instance);
  const int d = g.order();
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (!is_cut_set(g, sorted)) throw std::invalid_argument("S is not a cut set of the instance");
  const MinimalPrime prime = make_prime(g, sorted);

  std::pair<FactoredWitness, int> result;
  if (sorted.empty()) {
    std::vector<Atom> chain;
    push_chain(chain, 1, d);
    result = {FactoredWitness{d, std::move(chain)}, d - 1};
  } else if (const auto* mp = std::get_if<MultipartiteInstance>(&instance)) {
    (void)mp;
    result = multipartite_g(d, sorted);
  } else if (const auto* cp = std::get_if<CaterpillarInstance>(&instance)) {
    result = caterpillar_g(cp->spec, d, sorted);
  } else {
    const auto& jc = std::get<JoinOfCompletesInstance>(instance);
    if (sorted.size() != static_cast<std::size_t>(jc.n0))
      throw std::logic_error("nonempty cut set differs from the complete core");
    result = join_of_completes_g(jc.n0, jc.parts, d);
  }

  auto& [w, b] = result;
  if (b != prime.height)
    throw std::logic_error("claimed exponent " + std::to_string(b) + " differs from height " +
                           std::to_string(prime.height));
  if (order_lower_bound(w, prime) < b)
    throw std::logic_error("factor count of g falls below the claimed exponent");
  return {std::move(w), b};
}

}  // namespace bei
