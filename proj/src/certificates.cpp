#include "monocf/certificates.hpp"

#include <algorithm>

#include "monocf/errors.hpp"
#include "monocf/rng.hpp"

namespace monocf {

namespace {

// The completion queried by the extractor: rho where fixed; `fill` on the
// pinned/prefix features; the opposite bit on the remaining free features.
Instance completion(const Restriction& rho, const std::vector<int>& pinned, const std::vector<int>& universe,
                    int prefix_len, Bit fill) {
  Instance base = overwrite(Instance::constant(rho.dimension(), static_cast<Bit>(1 - fill)), rho);
  for (int i : pinned) base = base.with(i, fill);
  for (int j = 0; j < prefix_len; ++j) base = base.with(universe[static_cast<std::size_t>(j)], fill);
  return base;
}

}  // namespace

Certificate find_certificate(MonotoneOracle& f, const Restriction& rho, CertPolarity polarity) {
  if (rho.dimension() != f.dimension()) throw UsageError("find_certificate: restriction dimension mismatch");
  const int d = f.dimension();

  std::vector<int> universe;  // free features, ascending
  for (int i = 0; i < d; ++i)
    if (!rho.fixed(i)) universe.push_back(i);

  const Instance lo = overwrite(Instance::zeros(d), rho);
  const Instance hi = overwrite(Instance::ones(d), rho);
  const Bit v_lo = f.eval(lo);
  const Bit v_hi = f.eval(hi);
  if (v_lo == v_hi) return Certificate{{}, hi, v_hi};  // f_rho is constant
  if (v_lo == 1)
    throw InvariantViolation("find_certificate: f_rho(all-zeros) = 1 but f_rho(all-ones) = 0; oracle is not monotone");

  // With fill = 1 we grow a minimal set of features forced to 1 (a minterm);
  // with fill = 0, forced to 0 (a maxterm). Throughout, P(S) := "filling S and
  // leaving the other free features at the opposite value already determines
  // the target value". P is monotone in S, P(pinned) is false and
  // P(pinned + universe) is true, so the shortest feasible prefix ends in a
  // feature that every feasible subset of that prefix must contain.
  const Bit fill = (polarity == CertPolarity::kMinterm) ? Bit{1} : Bit{0};
  const Bit target = fill;

  auto probe = [&](const std::vector<int>& pinned, const std::vector<int>& uni, int prefix_len) {
    return f.eval(completion(rho, pinned, uni, prefix_len, fill)) == target;
  };

  std::vector<int> pinned;
  bool pinned_suffices = false;  // P(pinned); P(empty) = false since f_rho is not constant
  while (!pinned_suffices) {
    int lo_len = 0;
    int hi_len = static_cast<int>(universe.size());
    while (hi_len - lo_len > 1) {
      const int mid = (lo_len + hi_len) / 2;
      if (probe(pinned, universe, mid))
        hi_len = mid;
      else
        lo_len = mid;
    }
    pinned.push_back(universe[static_cast<std::size_t>(hi_len - 1)]);
    universe.resize(static_cast<std::size_t>(hi_len - 1));
    // P(pinned + full remaining universe) is now known true; when the
    // universe is empty that IS P(pinned), so no query is needed.
    pinned_suffices = universe.empty() ? true : probe(pinned, universe, 0);
  }

  std::sort(pinned.begin(), pinned.end());
  return Certificate{std::move(pinned), fill ? hi : lo, target};
}

Certificate find_certificate(MonotoneOracle& f) { return find_certificate(f, Restriction::empty(f.dimension())); }

bool verify_certificate(MonotoneOracle& f, const Instance& x, const std::vector<int>& features) {
  const int d = f.dimension();
  Instance lo = Instance::zeros(d);
  Instance hi = Instance::ones(d);
  for (int i : features) {
    if (i < 0 || i >= d) throw UsageError("verify_certificate: feature index out of range");
    lo = lo.with(i, x[i]);
    hi = hi.with(i, x[i]);
  }
  return f.eval(lo) == f.eval(hi);
}

bool verify_certificate_exhaustive(const Model& f, const Instance& x, const std::vector<int>& features) {
  const int d = f.dimension();
  std::vector<int> free_idx;
  std::vector<bool> in_w(static_cast<std::size_t>(d), false);
  for (int i : features) {
    if (i < 0 || i >= d) throw UsageError("verify_certificate_exhaustive: feature index out of range");
    in_w[static_cast<std::size_t>(i)] = true;
  }
  for (int i = 0; i < d; ++i)
    if (!in_w[static_cast<std::size_t>(i)]) free_idx.push_back(i);
  const int m = static_cast<int>(free_idx.size());
  if (m > 20) throw CapabilityError("verify_certificate_exhaustive: d - |W| exceeds the enumeration cap of 20");

  const Bit expected = f.value(x);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Instance y = x;
    for (int j = 0; j < m; ++j) y = y.with(free_idx[static_cast<std::size_t>(j)], static_cast<Bit>((mask >> j) & 1u));
    if (f.value(y) != expected) return false;
  }
  return true;
}

int sensitivity_at(const Model& f, const Instance& x) {
  const Bit base = f.value(x);
  int sensitive = 0;
  for (int i = 0; i < f.dimension(); ++i) sensitive += (f.value(x.flipped(i)) != base) ? 1 : 0;
  return sensitive;
}

int sensitivity(const Model& f) {
  const int d = f.dimension();
  if (d > 20) throw CapabilityError("sensitivity: d = " + std::to_string(d) + " exceeds the brute-force cap of 20");
  const auto table = truth_table(f);
  int best = 0;
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    int here = 0;
    for (int j = 0; j < d; ++j) here += (table[mask] != table[mask ^ (1u << j)]) ? 1 : 0;
    best = std::max(best, here);
  }
  return best;
}

namespace {

// Truth table of f_rho over the free coordinates, plus the free index list.
struct RestrictedTable {
  std::vector<int> free_idx;
  std::vector<Bit> table;  // indexed by free-coordinate mask
};

RestrictedTable restricted_table(const Model& f, const Restriction& rho) {
  const int d = f.dimension();
  RestrictedTable rt;
  for (int i = 0; i < d; ++i)
    if (!rho.fixed(i)) rt.free_idx.push_back(i);
  const int m = static_cast<int>(rt.free_idx.size());
  if (m > 16) throw CapabilityError("certificate_complexity: more than 16 free coordinates");
  rt.table.resize(std::size_t{1} << m);
  const Instance base = overwrite(Instance::zeros(d), rho);
  for (std::uint32_t mask = 0; mask < rt.table.size(); ++mask) {
    Instance y = base;
    for (int j = 0; j < m; ++j)
      if ((mask >> j) & 1u) y = y.with(rt.free_idx[static_cast<std::size_t>(j)], 1);
    rt.table[mask] = f.value(y);
  }
  return rt;
}

constexpr int kInf = 1 << 20;

// min_one[m] = min |T| over T subseteq m with table[T] = 1 (minimum-weight
// 1-point under the mask); used for C(f, x) at 1-inputs of a monotone f.
std::vector<int> min_weight_under(const std::vector<Bit>& table, int m, Bit target) {
  std::vector<int> best(table.size(), kInf);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask] == target) best[mask] = __builtin_popcount(mask);
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) best[mask] = std::min(best[mask], best[mask ^ (1u << j)]);
  }
  return best;
}

}  // namespace

CertComplexity certificate_complexity(const Model& f, const Restriction& rho) {
  const RestrictedTable rt = restricted_table(f, rho);
  const int m = static_cast<int>(rt.free_idx.size());
  const std::uint32_t full = static_cast<std::uint32_t>(rt.table.size()) - 1;

  // For monotone f and a 1-input x: the cheapest certificate keeps a minimal
  // T subseteq supp(x) with f(1_T, 0 elsewhere) = 1. Dually for 0-inputs,
  // with U subseteq zeros(x) and the all-ones completion. Constants get the
  // empty certificate, so an absent polarity contributes 0.
  std::vector<Bit> zero_side(rt.table.size());
  for (std::uint32_t u = 0; u <= full; ++u) zero_side[u] = rt.table[full ^ u] == 0 ? 1 : 0;
  const auto min_one = min_weight_under(rt.table, m, 1);
  const auto min_zero = min_weight_under(zero_side, m, 1);

  CertComplexity cc;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (rt.table[mask] == 1)
      cc.c1 = std::max(cc.c1, min_one[mask]);
    else
      cc.c0 = std::max(cc.c0, min_zero[full ^ mask]);
    if (rt.table.size() == 1) break;  // m == 0: single point, avoid wrap
  }
  cc.c = std::max(cc.c0, cc.c1);
  return cc;
}

CertComplexity certificate_complexity(const Model& f) {
  return certificate_complexity(f, Restriction::empty(f.dimension()));
}

namespace {

std::vector<std::vector<int>> masks_to_index_sets(const std::vector<std::uint32_t>& masks, int d) {
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (std::uint32_t m : masks) {
    std::vector<int> idx;
    for (int j = 0; j < d; ++j)
      if ((m >> j) & 1u) idx.push_back(j);
    out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> minimal_one_certificates(const Model& f) {
  const int d = f.dimension();
  if (d > 16) throw CapabilityError("minimal_one_certificates: d exceeds the enumeration cap of 16");
  const auto table = truth_table(f);
  std::vector<std::uint32_t> minterms;
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask] != 1) continue;
    bool minimal = true;
    for (int j = 0; j < d && minimal; ++j)
      if ((mask & (1u << j)) && table[mask ^ (1u << j)] == 1) minimal = false;
    if (minimal && mask != 0) minterms.push_back(mask);
  }
  return masks_to_index_sets(minterms, d);
}

std::vector<std::vector<int>> minimal_zero_certificates(const Model& f) {
  const int d = f.dimension();
  if (d > 16) throw CapabilityError("minimal_zero_certificates: d exceeds the enumeration cap of 16");
  const auto table = truth_table(f);
  const std::uint32_t full = static_cast<std::uint32_t>(table.size()) - 1;
  std::vector<std::uint32_t> maxterms;
  for (std::uint32_t u = 0; u <= full; ++u) {  // u = set of features fixed to 0
    if (table[full ^ u] != 0) continue;
    bool minimal = true;
    for (int j = 0; j < d && minimal; ++j)
      if ((u & (1u << j)) && table[full ^ (u ^ (1u << j))] == 0) minimal = false;
    if (minimal && u != 0) maxterms.push_back(u);
  }
  return masks_to_index_sets(maxterms, d);
}

BlockChooser all_ones_chooser() {
  return [](const Certificate& block, int) { return std::vector<Bit>(block.features.size(), 1); };
}

BlockChooser all_zeros_chooser() {
  return [](const Certificate& block, int) { return std::vector<Bit>(block.features.size(), 0); };
}

BlockChooser seeded_chooser(std::uint64_t seed) {
  return [seed](const Certificate& block, int round) {
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(round)));
    std::vector<Bit> bits(block.features.size());
    for (auto& b : bits) b = static_cast<Bit>(rng.bit());
    return bits;
  };
}

std::vector<std::pair<Certificate, Restriction>> restrict_until_constant(MonotoneOracle& f,
                                                                         const BlockChooser& chooser, int s_bound) {
  if (s_bound < 0) throw UsageError("restrict_until_constant: s_bound must be >= 0");
  std::vector<std::pair<Certificate, Restriction>> blocks;
  Restriction rho = Restriction::empty(f.dimension());
  for (int round = 0;; ++round) {
    Certificate cert = find_certificate(f, rho);
    if (cert.empty()) return blocks;  // f_rho is constant
    if (round >= 2 * s_bound)
      throw InvariantViolation("restrict_until_constant: not constant after 2*S = " + std::to_string(2 * s_bound) +
                               " certificate blocks");
    const std::vector<Bit> assignment = chooser(cert, round);
    if (assignment.size() != cert.features.size())
      throw UsageError("restrict_until_constant: chooser returned a wrong-size assignment");
    for (std::size_t j = 0; j < assignment.size(); ++j) rho = rho.with(cert.features[j], assignment[j]);
    blocks.emplace_back(std::move(cert), rho);
  }
}

}  // namespace monocf
