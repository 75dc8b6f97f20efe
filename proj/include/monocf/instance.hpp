#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monocf {

using Bit = std::uint8_t;

/// A point of the Boolean feature cube {0,1}^d.
///
/// Feature indices are 1-based in all I/O (strings, JSON, error messages) and
/// 0-based internally; the string encoding puts feature 1 first, so "100"
/// is the instance with x_1 = 1 and x_2 = x_3 = 0.
class Instance {
public:
  Instance() = default;
  explicit Instance(std::vector<Bit> bits) : bits_(std::move(bits)) {}

  static Instance zeros(int d) { return Instance(std::vector<Bit>(static_cast<std::size_t>(d), 0)); }
  static Instance ones(int d) { return Instance(std::vector<Bit>(static_cast<std::size_t>(d), 1)); }
  static Instance constant(int d, Bit b) { return Instance(std::vector<Bit>(static_cast<std::size_t>(d), b)); }

  /// Parses "10110"; throws UsageError on anything but a nonempty 0/1 string.
  static Instance parse(const std::string& s);

  /// Bit j of `mask` is feature j+1. Requires d <= 32.
  static Instance from_mask(std::uint32_t mask, int d);
  std::uint32_t to_mask() const;

  int dimension() const { return static_cast<int>(bits_.size()); }
  Bit operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<Bit>& bits() const { return bits_; }

  Instance with(int i, Bit b) const;
  Instance flipped(int i) const;

  /// Coordinatewise <=. Distinct from the lexicographic operator<=>.
  bool dominated_by(const Instance& other) const;

  std::string str() const;

  auto operator<=>(const Instance&) const = default;

private:
  std::vector<Bit> bits_;
};

inline constexpr Bit kStar = 2;

/// A partial assignment rho : [d] -> {0,1}, naming a node of a decision tree.
/// Stored dense (one cell per feature, kStar = unassigned) so that with() and
/// overwrite() are O(d) and branch-free.
class Restriction {
public:
  Restriction() = default;
  explicit Restriction(std::vector<Bit> cells) : cells_(std::move(cells)) {}

  static Restriction empty(int d) { return Restriction(std::vector<Bit>(static_cast<std::size_t>(d), kStar)); }

  /// Parses "1*0*"; throws UsageError on anything but a nonempty 0/1/* string.
  static Restriction parse(const std::string& s);

  int dimension() const { return static_cast<int>(cells_.size()); }
  Bit cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
  bool fixed(int i) const { return cells_[static_cast<std::size_t>(i)] != kStar; }

  /// rho_{i <- b}.
  Restriction with(int i, Bit b) const;

  /// Ascending indices of Dom(rho).
  std::vector<int> domain() const;
  int domain_size() const;

  /// True iff x agrees with rho on Dom(rho).
  bool consistent(const Instance& x) const;

  std::string str() const;

  auto operator<=>(const Restriction&) const = default;

private:
  std::vector<Bit> cells_;
};

/// Delta(x, y): ascending indices where the instances differ. Its size is the
/// sparsity of y as a counterfactual for x.
std::vector<int> delta(const Instance& x, const Instance& y);

/// x overwritten by rho: rho_i where fixed, x_i elsewhere.
Instance overwrite(const Instance& x, const Restriction& rho);

struct InstanceHash {
  std::size_t operator()(const Instance& x) const;
};

}  // namespace monocf
