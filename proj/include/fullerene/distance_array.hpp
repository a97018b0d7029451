#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fullerene::patchwork {

// Cyclic boundary code of a patch: entries in 1..6, equal up to rotation and
// reversal. Stored in canonical form (lexicographically least over all
// rotations and reversals); the empty array is the terminal value.
class DistanceArray {
 public:
  DistanceArray() = default;
  static DistanceArray from(const std::vector<int>& raw);  // canonicalizes
  static std::optional<DistanceArray> parse(const std::string& s);

  const std::vector<uint8_t>& entries() const { return canon_; }
  int size() const { return static_cast<int>(canon_.size()); }
  bool empty() const { return canon_.empty(); }
  int at(int i) const;  // cyclic access on the canonical form

  std::string str() const;  // e.g. "[12314124]", "[]"

  auto operator<=>(const DistanceArray&) const = default;

 private:
  std::vector<uint8_t> canon_;
};

// Canonical form of a raw cyclic sequence (helper shared with patch reading).
std::vector<uint8_t> canonical_cycle(const std::vector<uint8_t>& raw);

enum class OpKind : uint8_t { O1, O2, O3, O4 };

struct OpTag {
  OpKind kind = OpKind::O1;
  int pos = -1;  // 0-based position in the canonical form; -1 for O3

  auto operator<=>(const OpTag&) const = default;
};

std::string tag_str(const OpTag& t);  // "O1@3" (1-based), "O3"
std::optional<OpTag> parse_tag(const std::string& s);

// Boundary rewrites. Positions index the canonical form; each returns the
// canonicalized result or nothing when the preconditions fail.
//
// O1: k >= 4, a_i in {4,5}, neighbours both <= 4;
//     [.., a_{i-1}, a_i, a_{i+1}, ..] -> [.., a_{i-1}+2, 1, a_{i+1}+2, ..]
std::optional<DistanceArray> o1_apply(const DistanceArray& a, int pos);
// O2: k >= 4, a_i in {5,6}, a_{i-1}+a_{i+1} <= 6;
//     [.., a_{i-1}, a_i, a_{i+1}, ..] -> [.., a_{i-1}+a_{i+1}, ..]
std::optional<DistanceArray> o2_apply(const DistanceArray& a, int pos);
// O3: k == 2, both entries in {5,6}; -> []
std::optional<DistanceArray> o3_apply(const DistanceArray& a);
// O4: k == 8, a_i and a_{i+4} in {1,2}, all others in {3,4};
//     returns the aligned index i (smallest such).
std::optional<int> o4_applicable(const DistanceArray& a);

std::optional<DistanceArray> apply(const DistanceArray& a, const OpTag& t);

// All applicable operations in deterministic order (O1 by position, O2 by
// position, then O3, then O4).
std::vector<OpTag> applicable_ops(const DistanceArray& a);

}  // namespace fullerene::patchwork
