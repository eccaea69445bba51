#pragma once

// Self-normalizing Sylow correspondences: hypothesis checks, the restriction
// (star) map, the descent along O^p and derived subgroups, and the
// supporting lemma checks.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charcorr/chartab.hpp"

namespace charcorr {

struct McKayInstance {
  Subgroup group;
  unsigned p = 0;
  Subgroup sylow;
  Subgroup normalizer;
  bool solvable = false;
  bool p_solvable = false;
  bool self_normalizing = false;
  bool parity = false;  // p == 2 or |G| odd
  std::shared_ptr<TableCache> cache;

  bool star_applicable() const { return p_solvable && self_normalizing; }
  bool descent_applicable() const { return solvable && self_normalizing && parity; }
  /// Human-readable reason the descent refuses to run, empty when it runs.
  std::string descent_refusal() const;
  const CharacterTable& table() const { return *cache->table(group); }
  const CharacterTable& sylow_table() const { return *cache->table(sylow); }
};

/// Flags are always recomputed from the group. Throws InputError unless p is prime.
McKayInstance check_hypotheses(const Subgroup& g, unsigned p, std::shared_ptr<TableCache> cache = nullptr);
/// Same, with a caller-chosen Sylow p-subgroup.
McKayInstance check_hypotheses(const Subgroup& g, unsigned p, const Subgroup& sylow_p,
                               std::shared_ptr<TableCache> cache = nullptr);

/// Index in Lin(P) (a row of the Sylow table) of the unique linear
/// constituent of chi_P. Throws HypothesisError when the instance lacks
/// p-solvability or self-normalization or chi has degree divisible by p, and
/// TheoremViolation when the restriction does not split as linear + p-divisible.
std::size_t navarro_star(const McKayInstance& inst, std::size_t chi);

struct DescentStep {
  Subgroup group;  // G_i
  Subgroup k;      // O^p(G_i)
  Subgroup l;      // K_i'
  Subgroup h;      // P L_i
  Subgroup k_theta;
  std::size_t chi = 0;    // row of table(G_i)
  std::size_t theta = 0;  // row of table(L_i)
  std::size_t eta = 0;    // row of table(H_i)
  std::size_t fixed_points = 0;      // |C_{K_theta/L}(P)|
  std::size_t invariant_constituents = 0;  // P-invariant constituents of theta^{K_theta}
};

struct DescentResult {
  std::size_t xi = 0;  // row of the Sylow table
  std::vector<DescentStep> steps;
};

/// Repeats G -> H = P L with chi -> the unique constituent of chi_H over the
/// unique P-invariant constituent of chi_L, until G = P. Throws
/// HypothesisError unless the instance is solvable, self-normalizing and of
/// the parity variant; throws TheoremViolation when any step's uniqueness or
/// progress assertion fails.
DescentResult isaacs_descent(const McKayInstance& inst, std::size_t chi);

struct ExtensionWitness {
  Subgroup inertia;         // G_theta
  std::size_t witness = 0;  // row of table(G_theta) restricting to theta
};

/// Finds an irreducible of G_theta restricting to theta, a P-invariant
/// irreducible (row of table(n)) under chi, for n normal in G.
ExtensionWitness check_extension(const McKayInstance& inst, const Subgroup& n, std::size_t chi,
                                 std::size_t theta);

/// Number of P-invariant constituents of theta^K, for theta a P-invariant
/// irreducible of n, n normal in k, |k : n| prime to p, P normalizing both.
/// Asserts the count is positive and that it is 1 when P fixes only the
/// trivial coset of n in k.
std::size_t check_glauberman_unique(const Subgroup& p_group, const Subgroup& k, const Subgroup& n,
                                    const ClassFunction& theta, TableCache& cache);

struct McKayCount {
  std::size_t group_count = 0;       // |Irr_p'(G)|
  std::size_t normalizer_count = 0;  // |Irr_p'(N_G(P))|
  bool equal() const { return group_count == normalizer_count; }
};

McKayCount mckay_count(const McKayInstance& inst);

struct CharacterRecord {
  std::size_t chi = 0;
  long degree = 0;
  std::optional<std::size_t> star;
  std::optional<std::size_t> descent;
  std::vector<DescentStep> trace;
  bool coincide = false;
  std::string failure;  // forensic text when a theorem check failed
};

struct CorrespondenceReport {
  std::string name;
  std::size_t order = 0;
  unsigned p = 0;
  std::size_t sylow_order = 0;
  std::size_t normalizer_order = 0;
  bool solvable = false;
  bool self_normalizing = false;
  bool parity = false;
  std::vector<CharacterRecord> records;
  McKayCount count;
  std::size_t linear_count = 0;  // |Lin(P)|
  bool star_bijective = false;
  bool descent_bijective = false;
  bool verdict = false;
};

/// Runs both maps on every p'-degree irreducible; per-character work is
/// spread over `threads` workers and reduced in character order.
CorrespondenceReport verify_main(const McKayInstance& inst, unsigned threads = 1);

// --- lemma checks -----------------------------------------------------------------

struct CheckTally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;  // one line per failure
  bool ok() const { return failures == 0; }
  void merge(const CheckTally& o);
};

/// For K normal in G = KH, N = K cap H and each G-invariant phi in Irr(K)
/// restricting irreducibly to N: restriction maps Irr(G|phi) bijectively
/// onto Irr(H|phi_N).
CheckTally check_restriction_bijection(const Subgroup& g, const Subgroup& k, const Subgroup& h, TableCache& cache);

/// For every irreducible chi of G and N normal in G: the P-invariant
/// constituents of chi_N are pairwise N_G(P)-conjugate, exist when chi has
/// p'-degree, and are unique when additionally N_G(P) = P.
CheckTally check_invariant_constituents(const McKayInstance& inst, const Subgroup& n);

/// For K normal in G with complement H: N_G(H) = H exactly when C_K(H) = 1.
CheckTally check_complement_normalizer(const Subgroup& g, const Subgroup& k, const Subgroup& h);

/// Complements of a normal subgroup k: subgroups generated by a class
/// representative and one further element, and Sylow subgroups, closed under
/// conjugation. Complements needing more generators are not searched.
std::vector<Subgroup> find_complements(const Subgroup& g, const Subgroup& k);

/// N_G(PM) = N_G(P) M for every normal M.
CheckTally check_frattini_identity(const Subgroup& g, const Subgroup& p);

/// Galois automorphisms commute with the star map.
CheckTally check_galois_equivariance(const McKayInstance& inst);

}  // namespace charcorr
