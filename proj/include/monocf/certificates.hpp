#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "monocf/instance.hpp"
#include "monocf/oracle.hpp"

namespace monocf {

/// A set of features W that pins f's value at `witness`: every instance
/// agreeing with the witness on W (and, for restricted certificates, on
/// Dom(rho)) evaluates to `value`. For a constant (restriction of a) model the
/// certificate is empty.
struct Certificate {
  std::vector<int> features;  // ascending
  Instance witness;           // overwrite(all-ones, rho) for minterms, overwrite(all-zeros, rho) for maxterms
  Bit value = 0;

  bool empty() const { return features.empty(); }
  int size() const { return static_cast<int>(features.size()); }
};

enum class CertPolarity {
  kMinterm,  // extract a minimal 1-certificate from the all-ones completion (default)
  kMaxterm,  // symmetric extraction from all-zeros, for experimentation
};

/// Query-efficient certificate extraction for the restriction f_rho of a
/// monotone oracle.
///
/// If f_rho is constant, returns the empty certificate. Otherwise finds a
/// minimal set W of free features such that setting W to 1 and the remaining
/// free features to 0 already forces f_rho = 1 (a minterm of f_rho, hence a
/// 1-certificate of size <= C(f_rho) = S(f_rho)). W is located by critical-
/// feature binary search over the ascending free-feature order: repeatedly
/// find the shortest feasible prefix, pin its last feature, and recurse on
/// the remaining prefix; ties always resolve to the lower index, so the
/// result is deterministic. Spends at most 2*|W|*ceil(log2 d) + 2 oracle
/// queries.
Certificate find_certificate(MonotoneOracle& f, const Restriction& rho,
                             CertPolarity polarity = CertPolarity::kMinterm);
Certificate find_certificate(MonotoneOracle& f);

/// Decides whether W certifies f's value at x, for monotone f, with exactly
/// 2 queries: complete x outside W with all zeros and with all ones; W
/// certifies iff both agree (and then they automatically equal f(x)).
bool verify_certificate(MonotoneOracle& f, const Instance& x, const std::vector<int>& features);

/// Certificate check by exhaustive completion enumeration. Works for
/// arbitrary (also non-monotone) models; test-only fallback, requires
/// d - |W| <= 20.
bool verify_certificate_exhaustive(const Model& f, const Instance& x, const std::vector<int>& features);

/// Brute-force S_f(x): the number of coordinates whose flip changes f(x).
int sensitivity_at(const Model& f, const Instance& x);

/// Brute-force S(f) = max_x S_f(x). Requires d <= 20.
int sensitivity(const Model& f);

struct CertComplexity {
  int c = 0;   // C(f)   = max(C0, C1)
  int c0 = 0;  // C_0(f) = max over 0-inputs (0 when there are none)
  int c1 = 0;  // C_1(f)
};

/// Exact certificate complexities of the restriction f_rho of a monotone
/// model, by dynamic programming over the free-coordinate truth table.
/// Requires at most 16 free coordinates.
CertComplexity certificate_complexity(const Model& f, const Restriction& rho);
CertComplexity certificate_complexity(const Model& f);

/// All minimal 1-certificates (minterms) / 0-certificates (maxterms) of a
/// monotone model, as ascending index sets. Requires d <= 16.
std::vector<std::vector<int>> minimal_one_certificates(const Model& f);
std::vector<std::vector<int>> minimal_zero_certificates(const Model& f);

/// Picks the value each feature of a freshly drawn certificate block gets
/// restricted to; `round` counts blocks from 0.
using BlockChooser = std::function<std::vector<Bit>(const Certificate& block, int round)>;

BlockChooser all_ones_chooser();
BlockChooser all_zeros_chooser();
/// Seeded random per-feature assignments (deterministic given the seed).
BlockChooser seeded_chooser(std::uint64_t seed);

/// Repeatedly draws a certificate of the current restriction and fixes its
/// features to chooser-selected values until f_rho is constant. Returns one
/// (certificate, cumulative restriction) pair per block. The sequence is
/// guaranteed to end within 2*S(f) blocks; `s_bound` must be an upper bound
/// on S(f), and needing more than 2*s_bound blocks raises InvariantViolation
/// (it signals a certificate bug, an impure oracle, or a bad bound).
std::vector<std::pair<Certificate, Restriction>> restrict_until_constant(MonotoneOracle& f,
                                                                         const BlockChooser& chooser, int s_bound);

}  // namespace monocf
