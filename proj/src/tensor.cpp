#include "c2zhu/tensor.hpp"

#include "c2zhu/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace c2zhu {

// IrrDecomposition -----------------------------------------------------------

IrrDecomposition::IrrDecomposition(int rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("IrrDecomposition rank must be at least 2");
}

void IrrDecomposition::check_rank(int r) const {
  if (r != rank_) throw std::invalid_argument("IrrDecomposition rank mismatch");
}

Integer IrrDecomposition::multiplicity(const SlWeight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? Integer(0) : it->second;
}

void IrrDecomposition::add(const SlWeight& w, const Integer& mult) {
  check_rank(w.rank);
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
  }
}

IrrDecomposition& IrrDecomposition::operator+=(const IrrDecomposition& other) {
  check_rank(other.rank_);
  for (const auto& [w, m] : other.entries_) add(w, m);
  return *this;
}

IrrDecomposition& IrrDecomposition::operator-=(const IrrDecomposition& other) {
  check_rank(other.rank_);
  for (const auto& [w, m] : other.entries_) add(w, -m);
  return *this;
}

IrrDecomposition& IrrDecomposition::scale(const Integer& factor) {
  if (factor == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [w, m] : entries_) m *= factor;
  return *this;
}

Integer IrrDecomposition::virtual_dim() const {
  Integer total = 0;
  for (const auto& [w, m] : entries_) total += m * sl_dim(w);
  return total;
}

bool IrrDecomposition::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second > 0; });
}

// Character ------------------------------------------------------------------

Character::Character(int rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("Character rank must be at least 2");
}

Integer Character::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Character::add(const Weight& w, const Integer& mult) {
  if (static_cast<int>(w.size()) != rank_ - 1)
    throw std::invalid_argument("character weight has the wrong length");
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Character::mass() const {
  Integer total = 0;
  for (const auto& [w, m] : terms_) total += m;
  return total;
}

Character::Weight normalize_weight(const std::vector<int>& eps) {
  if (eps.empty()) throw std::invalid_argument("empty weight");
  Character::Weight out(eps.begin(), eps.end() - 1);
  for (int& x : out) x -= eps.back();
  return out;
}

// Gelfand-Tsetlin weights ----------------------------------------------------

namespace {

using WeightMap = std::map<std::vector<int>, Integer>;

const WeightMap& gt_weights(const GlWeight& w, std::map<GlWeight, WeightMap>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  WeightMap out;
  if (w.rank == 1) {
    out[{w.parts[0]}] = 1;
  } else {
    const int top = w.parts.size();
    for (const auto& mu : gt_branch(w)) {
      const int diff = top - mu.parts.size();
      for (const auto& [wt, mult] : gt_weights(mu, memo)) {
        auto ext = wt;
        ext.push_back(diff);
        out[ext] += mult;
      }
    }
  }
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

std::map<std::vector<int>, Integer> gl_weight_multiplicities(const GlWeight& w) {
  std::map<GlWeight, WeightMap> memo;
  return gt_weights(w, memo);
}

// Pieri and Littlewood-Richardson ---------------------------------------------

namespace {

// Calls visit(ν) for every horizontal strip ν/shape of size j within n rows,
// in lexicographic order of ν.
void for_each_horizontal_strip(const std::vector<int>& shape, int j,
                               const std::function<void(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(shape.size());
  std::vector<int> nu(shape);
  std::function<void(int, int)> rec = [&](int r, int remaining) {
    if (r == n) {
      if (remaining == 0) visit(nu);
      return;
    }
    const int cap = r == 0 ? shape[0] + remaining : std::min(shape[r - 1], shape[r] + remaining);
    for (int v = shape[r]; v <= cap; ++v) {
      nu[r] = v;
      rec(r + 1, remaining - (v - shape[r]));
    }
    nu[r] = shape[r];
  };
  if (n == 0) {
    if (j == 0) visit(nu);
    return;
  }
  rec(0, j);
}

}  // namespace

std::vector<Partition> pieri_row(const Partition& lambda, int j, int n) {
  if (lambda.length() > n) throw std::invalid_argument("pieri_row: λ has more than n parts");
  if (j < 0) throw std::invalid_argument("pieri_row: negative strip size");
  std::vector<Partition> out;
  for_each_horizontal_strip(lambda.padded(n), j,
                            [&](const std::vector<int>& nu) { out.emplace_back(nu); });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Partition, Integer> lr_coefficients(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.length() > n || mu.length() > n)
    throw std::invalid_argument("lr_coefficients: input has more than n parts");
  std::map<Partition, Integer> out;

  // Fill ν/λ with mu[0] ones, then mu[1] twos, ... each as a horizontal strip.
  // count[t][r] = number of label t in row r. The reading word (rows top to
  // bottom, right to left) is a lattice word iff for every t >= 1 and row r,
  // #(t+1 in rows <= r) <= #(t in rows < r).
  const int labels = mu.length();
  std::vector<std::vector<int>> count(static_cast<std::size_t>(labels),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
  std::function<void(int, const std::vector<int>&)> rec = [&](int t, const std::vector<int>& shape) {
    if (t == labels) {
      out[Partition(shape)] += 1;
      return;
    }
    for_each_horizontal_strip(shape, mu[t], [&](const std::vector<int>& nu) {
      for (int r = 0; r < n; ++r) count[t][r] = nu[r] - shape[r];
      if (t > 0) {
        int placed = 0;
        int prev_above = 0;
        for (int r = 0; r < n; ++r) {
          placed += count[t][r];
          if (placed > prev_above) return;
          prev_above += count[t - 1][r];
        }
      }
      rec(t + 1, nu);
    });
    std::fill(count[t].begin(), count[t].end(), 0);
  };
  rec(0, lambda.padded(n));
  return out;
}

IrrDecomposition tensor_sl(const SlWeight& a, const SlWeight& b) {
  if (a.rank != b.rank) throw std::invalid_argument("tensor_sl: rank mismatch");
  const int n = a.rank;
  IrrDecomposition out(n);
  for (const auto& [nu, c] : lr_coefficients(a.parts, b.parts, n))
    out.add(restrict_to_sl(GlWeight(n, nu)), c);
  return out;
}

// Characters -----------------------------------------------------------------

Character char_of(const IrrDecomposition& d) {
  Character out(d.rank());
  std::map<GlWeight, WeightMap> memo;
  for (const auto& [beta, mult] : d.entries()) {
    if (mult < 0) throw std::invalid_argument("char_of: negative multiplicity");
    for (const auto& [wt, m] : gt_weights(lift_to_gl(beta), memo))
      out.add(normalize_weight(wt), m * mult);
  }
  return out;
}

bool dominates(const Character::Weight& a, const Character::Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: length mismatch");
  const long n = static_cast<long>(a.size()) + 1;
  std::vector<long> d(static_cast<std::size_t>(n), 0);
  long sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d[i] = static_cast<long>(a[i]) - b[i];
    sum += d[i];
  }
  // Shift by a multiple of the all-ones vector to reach the trace-zero
  // representative; otherwise a - b is not in the root lattice.
  if (sum % n != 0) return false;
  const long shift = -sum / n;
  long partial = 0;
  for (long i = 0; i + 1 < n; ++i) {
    partial += d[i] + shift;
    if (partial < 0) return false;
  }
  return true;
}

namespace {

bool is_dominant(const Character::Weight& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) return false;
    if (i + 1 < w.size() && w[i] < w[i + 1]) return false;
  }
  return true;
}

}  // namespace

IrrDecomposition char_decompose(const Character& c) {
  const int n = c.rank();
  IrrDecomposition out(n);
  std::map<Character::Weight, Integer> rest = c.terms();
  std::map<GlWeight, WeightMap> memo;
  while (!rest.empty()) {
    for (const auto& [w, m] : rest)
      if (m < 0) throw NotACharacter("character has a negative coefficient");
    // Descending lexicographic scan; first dominant weight not strictly
    // below another support weight wins.
    const Character::Weight* top = nullptr;
    for (auto it = rest.rbegin(); it != rest.rend() && !top; ++it) {
      if (!is_dominant(it->first)) continue;
      bool maximal = true;
      for (const auto& [other, m] : rest) {
        if (other != it->first && dominates(other, it->first)) {
          maximal = false;
          break;
        }
      }
      if (maximal) top = &it->first;
    }
    if (!top) throw NotACharacter("no dominant maximal weight in a nonzero remainder");
    const SlWeight beta(n, Partition(*top));
    const Integer mult = rest.at(*top);
    out.add(beta, mult);
    for (const auto& [wt, m] : gt_weights(lift_to_gl(beta), memo)) {
      auto key = normalize_weight(wt);
      auto it = rest.find(key);
      const Integer updated = (it == rest.end() ? Integer(0) : it->second) - m * mult;
      if (updated < 0) throw NotACharacter("peeling produced a negative coefficient");
      if (updated == 0) {
        if (it != rest.end()) rest.erase(it);
      } else {
        rest[key] = updated;
      }
    }
  }
  return out;
}

}  // namespace c2zhu
