#include "monocf/instance.hpp"

#include "monocf/errors.hpp"

namespace monocf {

Instance Instance::parse(const std::string& s) {
  if (s.empty()) throw UsageError("instance string is empty");
  std::vector<Bit> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw UsageError("instance string must be over {0,1}, got '" + s + "'");
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return Instance(std::move(bits));
}

Instance Instance::from_mask(std::uint32_t mask, int d) {
  std::vector<Bit> bits(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) bits[static_cast<std::size_t>(j)] = static_cast<Bit>((mask >> j) & 1u);
  return Instance(std::move(bits));
}

std::uint32_t Instance::to_mask() const {
  std::uint32_t mask = 0;
  for (int j = 0; j < dimension(); ++j)
    if (bits_[static_cast<std::size_t>(j)]) mask |= (1u << j);
  return mask;
}

Instance Instance::with(int i, Bit b) const {
  Instance copy = *this;
  copy.bits_[static_cast<std::size_t>(i)] = b;
  return copy;
}

Instance Instance::flipped(int i) const {
  Instance copy = *this;
  copy.bits_[static_cast<std::size_t>(i)] ^= 1;
  return copy;
}

bool Instance::dominated_by(const Instance& other) const {
  for (int i = 0; i < dimension(); ++i)
    if (bits_[static_cast<std::size_t>(i)] > other.bits_[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::string Instance::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Restriction Restriction::parse(const std::string& s) {
  if (s.empty()) throw UsageError("restriction string is empty");
  std::vector<Bit> cells;
  cells.reserve(s.size());
  for (char c : s) {
    if (c == '0' || c == '1')
      cells.push_back(static_cast<Bit>(c - '0'));
    else if (c == '*')
      cells.push_back(kStar);
    else
      throw UsageError("restriction string must be over {0,1,*}, got '" + s + "'");
  }
  return Restriction(std::move(cells));
}

Restriction Restriction::with(int i, Bit b) const {
  Restriction copy = *this;
  copy.cells_[static_cast<std::size_t>(i)] = b;
  return copy;
}

std::vector<int> Restriction::domain() const {
  std::vector<int> dom;
  for (int i = 0; i < dimension(); ++i)
    if (fixed(i)) dom.push_back(i);
  return dom;
}

int Restriction::domain_size() const {
  int n = 0;
  for (int i = 0; i < dimension(); ++i) n += fixed(i) ? 1 : 0;
  return n;
}

bool Restriction::consistent(const Instance& x) const {
  for (int i = 0; i < dimension(); ++i)
    if (fixed(i) && cell(i) != x[i]) return false;
  return true;
}

std::string Restriction::str() const {
  std::string s;
  s.reserve(cells_.size());
  for (Bit c : cells_) s.push_back(c == kStar ? '*' : static_cast<char>('0' + c));
  return s;
}

std::vector<int> delta(const Instance& x, const Instance& y) {
  if (x.dimension() != y.dimension())
    throw UsageError("delta: instances have different lengths (" + std::to_string(x.dimension()) + " vs " +
                     std::to_string(y.dimension()) + ")");
  std::vector<int> diff;
  for (int i = 0; i < x.dimension(); ++i)
    if (x[i] != y[i]) diff.push_back(i);
  return diff;
}

Instance overwrite(const Instance& x, const Restriction& rho) {
  if (x.dimension() != rho.dimension())
    throw UsageError("overwrite: instance length " + std::to_string(x.dimension()) +
                     " does not match restriction length " + std::to_string(rho.dimension()));
  std::vector<Bit> bits(static_cast<std::size_t>(x.dimension()));
  for (int i = 0; i < x.dimension(); ++i) {
    const Bit c = rho.cell(i);
    bits[static_cast<std::size_t>(i)] = (c == kStar) ? x[i] : c;
  }
  return Instance(std::move(bits));
}

std::size_t InstanceHash::operator()(const Instance& x) const {
  // FNV-1a over the bit vector.
  std::size_t h = 1469598103934665603ull;
  for (Bit b : x.bits()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace monocf
