#include "fullerene/distance_array.hpp"

#include <algorithm>
#include <stdexcept>

namespace fullerene::patchwork {

std::vector<uint8_t> canonical_cycle(const std::vector<uint8_t>& raw) {
  int k = static_cast<int>(raw.size());
  if (k == 0) return {};
  std::vector<uint8_t> best, cur(k);
  for (int dir : {1, -1}) {
    for (int r = 0; r < k; ++r) {
      for (int i = 0; i < k; ++i) cur[i] = raw[((r + dir * i) % k + k) % k];
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

DistanceArray DistanceArray::from(const std::vector<int>& raw) {
  DistanceArray a;
  std::vector<uint8_t> v;
  v.reserve(raw.size());
  for (int x : raw) {
    if (x < 1 || x > 6)
      throw std::invalid_argument("distance-array entry out of range 1..6");
    v.push_back(static_cast<uint8_t>(x));
  }
  a.canon_ = canonical_cycle(v);
  return a;
}

std::optional<DistanceArray> DistanceArray::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  std::vector<int> raw;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c < '1' || c > '6') return std::nullopt;
    raw.push_back(c - '0');
  }
  return DistanceArray::from(raw);
}

int DistanceArray::at(int i) const {
  int k = size();
  return canon_[((i % k) + k) % k];
}

std::string DistanceArray::str() const {
  std::string s = "[";
  for (uint8_t x : canon_) s += static_cast<char>('0' + x);
  s += ']';
  return s;
}

std::string tag_str(const OpTag& t) {
  switch (t.kind) {
    case OpKind::O1:
      return "O1@" + std::to_string(t.pos + 1);
    case OpKind::O2:
      return "O2@" + std::to_string(t.pos + 1);
    case OpKind::O3:
      return "O3";
    case OpKind::O4:
      return "O4@" + std::to_string(t.pos + 1);
  }
  return "?";
}

std::optional<OpTag> parse_tag(const std::string& s) {
  if (s == "O3") return OpTag{OpKind::O3, -1};
  if (s.size() < 4 || s[0] != 'O' || s[2] != '@') return std::nullopt;
  OpKind kind;
  switch (s[1]) {
    case '1':
      kind = OpKind::O1;
      break;
    case '2':
      kind = OpKind::O2;
      break;
    case '4':
      kind = OpKind::O4;
      break;
    default:
      return std::nullopt;
  }
  int pos = 0;
  for (size_t i = 3; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    pos = pos * 10 + (s[i] - '0');
  }
  if (pos < 1) return std::nullopt;
  return OpTag{kind, pos - 1};
}

std::optional<DistanceArray> o1_apply(const DistanceArray& a, int pos) {
  int k = a.size();
  if (k < 4 || pos < 0 || pos >= k) return std::nullopt;
  int ai = a.at(pos), left = a.at(pos - 1), right = a.at(pos + 1);
  if (ai != 4 && ai != 5) return std::nullopt;
  if (left > 4 || right > 4) return std::nullopt;
  std::vector<int> out;
  out.reserve(k);
  // rebuild starting at pos+2 so the rewritten window sits at the end
  for (int i = pos + 2; i <= pos + k - 2; ++i) out.push_back(a.at(i));
  out.push_back(left + 2);
  out.push_back(1);
  out.push_back(right + 2);
  return DistanceArray::from(out);
}

std::optional<DistanceArray> o2_apply(const DistanceArray& a, int pos) {
  int k = a.size();
  if (k < 4 || pos < 0 || pos >= k) return std::nullopt;
  int ai = a.at(pos), left = a.at(pos - 1), right = a.at(pos + 1);
  if (ai != 5 && ai != 6) return std::nullopt;
  if (left + right > 6) return std::nullopt;
  std::vector<int> out;
  out.reserve(k - 2);
  for (int i = pos + 2; i <= pos + k - 2; ++i) out.push_back(a.at(i));
  out.push_back(left + right);
  return DistanceArray::from(out);
}

std::optional<DistanceArray> o3_apply(const DistanceArray& a) {
  if (a.size() != 2) return std::nullopt;
  for (int i = 0; i < 2; ++i)
    if (a.at(i) != 5 && a.at(i) != 6) return std::nullopt;
  return DistanceArray::from({});
}

std::optional<int> o4_applicable(const DistanceArray& a) {
  if (a.size() != 8) return std::nullopt;
  for (int i = 0; i < 8; ++i) {
    int x = a.at(i), y = a.at(i + 4);
    if ((x == 1 || x == 2) && (y == 1 || y == 2)) {
      bool rest_ok = true;
      for (int j = 0; j < 8; ++j) {
        if (j == i || j == (i + 4) % 8) continue;
        if (a.at(j) != 3 && a.at(j) != 4) rest_ok = false;
      }
      if (rest_ok) return i;
    }
  }
  return std::nullopt;
}

std::optional<DistanceArray> apply(const DistanceArray& a, const OpTag& t) {
  switch (t.kind) {
    case OpKind::O1:
      return o1_apply(a, t.pos);
    case OpKind::O2:
      return o2_apply(a, t.pos);
    case OpKind::O3:
      return o3_apply(a);
    case OpKind::O4: {
      auto i = o4_applicable(a);
      if (!i || *i != t.pos) return std::nullopt;
      return DistanceArray::from({});
    }
  }
  return std::nullopt;
}

std::vector<OpTag> applicable_ops(const DistanceArray& a) {
  std::vector<OpTag> out;
  for (int i = 0; i < a.size(); ++i)
    if (o1_apply(a, i)) out.push_back({OpKind::O1, i});
  for (int i = 0; i < a.size(); ++i)
    if (o2_apply(a, i)) out.push_back({OpKind::O2, i});
  if (o3_apply(a)) out.push_back({OpKind::O3, -1});
  if (auto i = o4_applicable(a)) out.push_back({OpKind::O4, *i});
  return out;
}

}  // namespace fullerene::patchwork
