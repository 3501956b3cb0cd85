#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypersparse {

using VertexId = int;

/// A subset of the universe [0, n) stored as a packed bitset. Cut queries of
/// every evaluator take one of these.
class CutSet {
 public:
  CutSet() = default;
  explicit CutSet(int n) : n_(n), words_(word_count(n), 0) {
    if (n < 0) throw std::invalid_argument("CutSet: negative universe size");
  }

  static CutSet from_mask(int n, std::uint64_t mask) {
    if (n < 64 && (mask >> n) != 0)
      throw std::invalid_argument("CutSet: mask has bits outside [0, n)");
    CutSet s(n);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static CutSet from_members(int n, std::initializer_list<VertexId> members) {
    return from_members(n, std::vector<VertexId>(members));
  }

  static CutSet from_members(int n, const std::vector<VertexId>& members) {
    CutSet s(n);
    for (VertexId v : members) s.insert(v);
    return s;
  }

  static CutSet full(int n) { return CutSet(n).complement(); }

  int universe_size() const { return n_; }

  bool contains(VertexId v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void insert(VertexId v) {
    check(v);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(VertexId v) {
    check(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  CutSet complement() const {
    CutSet out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  CutSet& operator|=(const CutSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  CutSet& operator&=(const CutSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// Set difference.
  CutSet& operator-=(const CutSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend CutSet operator|(CutSet a, const CutSet& b) { return a |= b; }
  friend CutSet operator&(CutSet a, const CutSet& b) { return a &= b; }
  friend CutSet operator-(CutSet a, const CutSet& b) { return a -= b; }
  friend bool operator==(const CutSet&, const CutSet&) = default;

  int size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const { return size() == 0; }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  /// Numeric bitmask; only defined for universes of at most 64 vertices.
  std::uint64_t to_mask() const {
    if (n_ > 64) throw std::out_of_range("CutSet: universe too large for a mask");
    return words_.empty() ? 0 : words_[0];
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Lowercase hex of the membership bits, most significant word first.
  std::string to_hex() const;

  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> indicator() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n_);
    for (VertexId v = 0; v < n_; ++v)
      if (contains(v)) x(v) = Scalar(1);
    return x;
  }

 private:
  static std::size_t word_count(int n) {
    return n <= 0 ? 0 : (static_cast<std::size_t>(n) + 63) / 64;
  }
  void check(VertexId v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("CutSet: vertex " + std::to_string(v) +
                              " outside [0, " + std::to_string(n_) + ")");
  }
  void same_universe(const CutSet& other) const {
    if (other.n_ != n_)
      throw std::invalid_argument("CutSet: universe size mismatch");
  }
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::string CutSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = words_.size(); i-- > 0;) {
    for (int shift = 60; shift >= 0; shift -= 4)
      out.push_back(kDigits[(words_[i] >> shift) & 0xf]);
  }
  std::size_t first = out.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  return out.substr(first);
}

}  // namespace hypersparse
