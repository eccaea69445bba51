#pragma once

// Group constructions for the verification corpus, and the order-648 group
// K x| SL(2,3) with K extraspecial of order 27 and exponent 3, where the
// linear-constituent correspondence breaks down outside the self-normalizing
// case.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charcorr/chartab.hpp"
#include "charcorr/perm_group.hpp"

namespace charcorr {

/// 2x2 matrix over F_q acting on row vectors: v -> vM.
using Mat2 = std::array<std::array<int, 2>, 2>;

/// x -> x+1 and x -> m*x on Z/n.
GroupDescription cyclic_affine_group(std::string name, unsigned n, unsigned m);
/// The given matrices (and all translations unless `linear_only`) acting on
/// F_q^2, point a + q*b for the vector (a, b). Linear-only groups act on the
/// q^2 - 1 nonzero vectors.
GroupDescription plane_group(std::string name, unsigned q, const std::vector<Mat2>& mats, bool linear_only = false);
/// Heisenberg group of order 27 (pairs (v, c) in F_3^2 x F_3 with
/// (v, c)(w, d) = (v + w, c + d + 2*det(v; w))) acting on itself by right
/// translation, extended by the automorphisms (v, c) -> (vM, det(M) c).
GroupDescription heisenberg_group(std::string name, const std::vector<Mat2>& mats);

namespace mats {
inline const std::vector<Mat2> sl23{{{{1, 1}, {0, 1}}}, {{{1, 0}, {1, 1}}}};
inline const std::vector<Mat2> gl23{{{{1, 1}, {0, 1}}}, {{{1, 0}, {1, 1}}}, {{{2, 0}, {0, 1}}}};
inline const std::vector<Mat2> sd16{{{{0, 1}, {1, 1}}}, {{{1, 0}, {1, 2}}}};
inline const std::vector<Mat2> q8{{{{0, 1}, {2, 0}}}, {{{1, 1}, {1, 2}}}};
}  // namespace mats

struct CorpusEntry {
  std::string file;  // file name inside the corpus directory
  unsigned p;
  bool positive;     // satisfies every hypothesis of the descent
  std::string role;
};

/// Verification targets in a fixed order.
const std::vector<CorpusEntry>& corpus();
/// The description behind a corpus file name; throws InputError when unknown.
GroupDescription builtin_group(const std::string& file);
std::vector<std::string> builtin_names();

// --- the order-648 group ------------------------------------------------------------

struct RemarkData {
  GroupPtr parent;
  Subgroup g, k, l, h, p, n;  // n = N_G(P)
  std::shared_ptr<TableCache> cache;
  std::size_t theta = 0;  // first nontrivial row of table(L)
  std::size_t phi = 0;    // the row of table(K) over theta
};

/// Builds the group and asserts its structural invariants (orders
/// 648/27/3/24/8/72, K extraspecial of exponent 3, N = L x H, P acting
/// fixed-point-freely on K/L). InputError when `cap` is below 648.
RemarkData build_remark_group(std::size_t cap = kDefaultEnumerationCap);

/// e with theta^K = e*phi and phi_L = e*theta for a single phi, or nullopt
/// when theta is not fully ramified in K/L.
std::optional<long> ramification_index(const RemarkData& d, std::size_t theta);
/// Same, but a missing pattern or e^2 != |K:L| throws TheoremViolation.
long verify_fully_ramified(const RemarkData& d, std::size_t theta);

struct PsiCandidate {
  std::size_t alpha = 0;  // linear row of table(H)
  std::size_t beta = 0;   // degree-2 row of table(H)
  std::vector<Cyc> values;  // on the classes of H
  bool viable = false;      // chi_N = psi_N xi is a bijection on odd degrees
  bool matches_values = false;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row of G, row of N)
};

/// All nine alpha + beta candidates in (alpha, beta) table order.
std::vector<PsiCandidate> recover_psi(const RemarkData& d);

struct PairInner {
  std::size_t chi = 0;
  std::size_t xi = 0;
  long chi_degree = 0;
  long xi_degree = 0;
  Rat inner;  // <chi_N, xi>
};

/// <chi_N, xi> for each pair of a viable candidate; throws TheoremViolation
/// when a pair with linear xi has nonzero product.
std::vector<PairInner> verify_non_constituent(const RemarkData& d, const PsiCandidate& psi);

struct RemarkReport {
  std::size_t order = 0, k_order = 0, l_order = 0, h_order = 0, p_order = 0, n_order = 0;
  bool extraspecial = false;
  bool self_normalizing = false;
  long e = 0;
  long e_conjugate = 0;
  long phi_degree = 0;
  std::size_t invariant_constituents = 0;  // P-invariant constituents of theta^K
  std::vector<std::uint32_t> h_class_orders;
  std::vector<std::size_t> h_class_sizes;
  std::vector<PsiCandidate> candidates;
  std::optional<std::size_t> chosen;  // first viable candidate matching the stated values
  std::vector<PairInner> pairs;
  bool verdict = false;
};

RemarkReport run_remark(std::size_t cap = kDefaultEnumerationCap);

}  // namespace charcorr
