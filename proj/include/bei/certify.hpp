#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bei/families.hpp"
#include "bei/graph.hpp"
#include "bei/polyfp.hpp"
#include "bei/primes.hpp"

namespace bei {

enum class CertificateKind { symbolic_f_split, strong_f_regular };
enum class Verdict { pass, fail };

std::string to_string(CertificateKind kind);
std::string to_string(Verdict verdict);

struct PrimeBound {
  MinimalPrime prime;
  int required = 0;
  int bound = 0;
};

/// Outcome of checking one witness against every minimal prime. All vertex
/// names (cut sets, witness indices) refer to the graph after applying
/// labeling_used.
struct Certificate {
  CertificateKind kind = CertificateKind::symbolic_f_split;
  std::uint32_t p = 2;
  FactoredWitness witness;
  std::optional<std::size_t> cofactor_index;
  std::vector<PrimeBound> per_prime;
  bool frobenius_ok = false;
  Verdict verdict = Verdict::fail;
  std::vector<std::string> assumptions;
  Labeling labeling_used;
  /// First prime (index into per_prime) whose bound misses the requirement.
  std::optional<std::size_t> blocking;
  int deficit = 0;
  std::uint64_t labelings_tried = 0;
};

/// y_1 f_{1,2} f_{2,3} ... f_{d-1,d} x_d; throws for d < 2.
FactoredWitness canonical_witness(int d);

/// Lower bound on the largest n with the atom in P^n.
int factor_order(const Atom& atom, const MinimalPrime& prime);
/// Sum of factor_order over the atoms.
int order_lower_bound(const FactoredWitness& w, const MinimalPrime& prime);

struct CertifyOptions {
  /// On failure, retry over relabelings: hints first, then every permutation
  /// in lexicographic order.
  bool search_labelings = false;
  std::vector<Labeling> hint_labelings;
  std::uint64_t labeling_budget = 100'000;
  int max_vertices = 22;
  FrobeniusOptions frobenius;
};

/// f in q^{ht q} for every minimal prime q, and f^{p-1} outside m^[p].
Certificate certify_symbolic_fsplit(const Graph& g, std::uint32_t p,
                                    const CertifyOptions& options = {});

/// g = f without the factor at cofactor_index must lie in q^{ht q - 1} for
/// every minimal prime; the Frobenius check runs on the full f.
Certificate certify_strong_freg(const Graph& g, std::uint32_t p, std::size_t cofactor_index,
                                const CertifyOptions& options = {});

/// Position of the atom in the canonical witness on d vertices.
std::optional<std::size_t> canonical_position(int d, const Atom& atom);

// --- explicit decompositions from the family proofs ----------------------

struct MultipartiteInstance {
  std::vector<int> sizes;
};
struct CaterpillarInstance {
  CaterpillarSpec spec;
};
struct JoinOfCompletesInstance {
  int n0 = 1;
  std::vector<int> parts;
};
using FamilyInstance =
    std::variant<MultipartiteInstance, CaterpillarInstance, JoinOfCompletesInstance>;

Graph instance_graph(const FamilyInstance& instance);

struct ProofDecomposition {
  FactoredWitness g;
  int claimed_order = 0;
};

/// The product g that the family proof exhibits for the cut set S, with the
/// exponent b it claims. Throws std::invalid_argument if S is not a
/// cut set and std::logic_error if b differs from the height of p_S.
ProofDecomposition proof_decomposition(const FamilyInstance& instance, const VertexSet& s);

}  // namespace bei
