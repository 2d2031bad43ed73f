#include "c2zhu/exact_rank.hpp"

#include <algorithm>

namespace c2zhu {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) v /= g;
}

// a·row - b·pivot; the caller picks a, b so the leading entries cancel.
SparseRow combine(const SparseRow& row, const Integer& a, const SparseRow& pivot, const Integer& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto r = row.begin();
  auto p = pivot.begin();
  while (r != row.end() || p != pivot.end()) {
    if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
      out.emplace_back(r->first, a * r->second);
      ++r;
    } else if (r == row.end() || p->first < r->first) {
      out.emplace_back(p->first, -b * p->second);
      ++p;
    } else {
      Integer v = a * r->second - b * p->second;
      if (v != 0) out.emplace_back(r->first, std::move(v));
      ++r;
      ++p;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::insert(SparseRow row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  auto by_column = [](const auto& x, const auto& y) { return x.first < y.first; };
  if (!std::is_sorted(row.begin(), row.end(), by_column)) std::sort(row.begin(), row.end(), by_column);
  make_primitive(row);
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    const SparseRow& pivot = it->second;
    const Integer g = gcd(pivot.front().second, row.front().second);
    const Integer a = pivot.front().second / g;
    const Integer b = row.front().second / g;
    row = combine(row, a, pivot, b);
    make_primitive(row);
  }
  return false;
}

SparseRow primitive_row(const std::vector<std::pair<int, Rational>>& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) {
    const Integer d = denominator(v);
    l = l / gcd(l, d) * d;
  }
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    out.emplace_back(c, numerator(v) * (l / denominator(v)));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  make_primitive(out);
  return out;
}

}  // namespace c2zhu
