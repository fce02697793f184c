#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace dynmono {

// `count` primes, each with ramification index e and residue degree f.
struct PrimeSplit {
  int e = 1;
  int f = 1;
  std::uint64_t count = 1;

  friend bool operator==(const PrimeSplit&, const PrimeSplit&) = default;
};

// Multiset of (e, f) describing the factorization of a rational prime.
class SplittingShape {
 public:
  SplittingShape() = default;
  explicit SplittingShape(std::vector<PrimeSplit> entries, std::optional<int> level = std::nullopt)
      : level_(level) {
    for (const auto& s : entries) add(s.e, s.f, s.count);
  }

  void add(int e, int f, std::uint64_t count = 1) {
    if (count == 0) return;
    for (auto& s : entries_) {
      if (s.e == e && s.f == f) {
        s.count += count;
        return;
      }
    }
    entries_.push_back({e, f, count});
    std::sort(entries_.begin(), entries_.end(),
              [](const PrimeSplit& a, const PrimeSplit& b) { return std::tie(a.f, a.e) < std::tie(b.f, b.e); });
  }

  const std::vector<PrimeSplit>& entries() const { return entries_; }
  std::optional<int> level() const { return level_; }
  void set_level(int n) { level_ = n; }

  std::uint64_t total_degree() const {
    std::uint64_t t = 0;
    for (const auto& s : entries_) t += static_cast<std::uint64_t>(s.e) * static_cast<std::uint64_t>(s.f) * s.count;
    return t;
  }
  std::uint64_t prime_count() const {
    std::uint64_t t = 0;
    for (const auto& s : entries_) t += s.count;
    return t;
  }

  // Residue degrees with multiplicity, ascending.
  std::vector<int> residue_degrees() const {
    std::vector<int> out;
    for (const auto& s : entries_) out.insert(out.end(), s.count, s.f);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Multiset equality; the level is not compared.
  friend bool operator==(const SplittingShape& a, const SplittingShape& b) { return a.entries_ == b.entries_; }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += "(e=" + std::to_string(entries_[i].e) + ", f=" + std::to_string(entries_[i].f) + ")";
      if (entries_[i].count != 1) out += "x" + std::to_string(entries_[i].count);
    }
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const SplittingShape& s) { return os << s.to_string(); }

 private:
  std::vector<PrimeSplit> entries_;
  std::optional<int> level_;
};

}  // namespace dynmono
