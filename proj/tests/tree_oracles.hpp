#pragma once

// Tree helpers for tests that avoid the library's canonical machinery.

#include <algorithm>
#include <string>
#include <vector>

namespace pawn::test {

inline bool shortlex(const std::string& a, const std::string& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

// Canonical string of the part of a parent array kept by `keep`, rooted
// at v, computed without the library.
inline std::string oracle_encoding(const std::vector<int>& parent, const std::vector<bool>& keep, int v) {
  std::vector<std::string> kids;
  for (int u = 0; u < static_cast<int>(parent.size()); ++u)
    if (parent[u] == v && keep[u]) kids.push_back(oracle_encoding(parent, keep, u));
  std::sort(kids.begin(), kids.end(), shortlex);
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string oracle_encoding(const std::vector<int>& parent, int v) {
  return oracle_encoding(parent, std::vector<bool>(parent.size(), true), v);
}

}  // namespace pawn::test
