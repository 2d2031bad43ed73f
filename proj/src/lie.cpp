#include "c2zhu/lie.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace c2zhu {

namespace {

void accumulate(std::map<int, Rational>& acc, int idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

LieVector to_vector(const std::map<int, Rational>& acc) { return {acc.begin(), acc.end()}; }

}  // namespace

// LieBasis -------------------------------------------------------------------

LieBasis::LieBasis(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("LieBasis requires n >= 2");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      units_.emplace_back(a, b);
      labels_.push_back("E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
      EpsWeight w(static_cast<std::size_t>(n), 0);
      w[a] += 1;
      w[b] -= 1;
      weights_.push_back(std::move(w));
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    units_.emplace_back(i, i);
    labels_.push_back("H" + std::to_string(i + 1));
    weights_.emplace_back(static_cast<std::size_t>(n), 0);
  }

  const int d = dim();
  table_.resize(static_cast<std::size_t>(d * d));
  for (int x = 0; x < d; ++x) {
    const auto mx = to_matrix(x);
    for (int y = 0; y < d; ++y) {
      const auto my = to_matrix(y);
      Matrix comm;
      for (const auto& [ij, cx] : mx) {
        for (const auto& [kl, cy] : my) {
          if (ij.second == kl.first) comm[{ij.first, kl.second}] += cx * cy;
          if (kl.second == ij.first) comm[{kl.first, ij.second}] -= cx * cy;
        }
      }
      table_[x * d + y] = from_matrix(comm);
    }
  }
  verify();
}

int LieBasis::e_index(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) throw std::out_of_range("no such E_ab");
  // Row a-1 holds n-1 off-diagonal units; skip the diagonal position.
  const int row = a - 1;
  const int col = b - 1;
  return row * (n_ - 1) + (col < row ? col : col - 1);
}

int LieBasis::h_index(int i) const {
  if (i < 1 || i > n_ - 1) throw std::out_of_range("no such H_i");
  return n_ * (n_ - 1) + i - 1;
}

LieBasis::Matrix LieBasis::to_matrix(int idx) const {
  const auto [a, b] = units_.at(idx);
  if (a != b) return {{{a, b}, Rational(1)}};
  return {{{a, a}, Rational(1)}, {{a + 1, a + 1}, Rational(-1)}};
}

LieVector LieBasis::from_matrix(const Matrix& m) const {
  std::map<int, Rational> acc;
  std::vector<Rational> diag(static_cast<std::size_t>(n_));
  for (const auto& [ij, c] : m) {
    if (ij.first == ij.second)
      diag[ij.first] += c;
    else
      accumulate(acc, e_index(ij.first + 1, ij.second + 1), c);
  }
  // diag = Σ c_i (e_i - e_{i+1})  <=>  c_i = d_1 + ... + d_i
  Rational partial = 0;
  for (int i = 0; i + 1 < n_; ++i) {
    partial += diag[i];
    accumulate(acc, h_index(i + 1), partial);
  }
  if (partial + diag[n_ - 1] != 0) throw std::logic_error("bracket left sl_n: nonzero trace");
  return to_vector(acc);
}

void LieBasis::verify() const {
  const int d = dim();
  auto ad = [&](int x, const LieVector& v) {
    std::map<int, Rational> acc;
    for (const auto& [j, c] : v)
      for (const auto& [l, s] : bracket(x, j)) accumulate(acc, l, c * s);
    return acc;
  };
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      const auto& xy = bracket(x, y);
      std::map<int, Rational> sum;
      for (const auto& [j, c] : xy) accumulate(sum, j, c);
      for (const auto& [j, c] : bracket(y, x)) accumulate(sum, j, c);
      if (!sum.empty()) throw std::logic_error("bracket table is not antisymmetric");
      for (const auto& [j, c] : xy) {
        for (int i = 0; i < n_; ++i)
          if (weight(j)[i] != weight(x)[i] + weight(y)[i])
            throw std::logic_error("bracket violates weight additivity");
      }
    }
  }
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      for (int z = 0; z < d; ++z) {
        std::map<int, Rational> total;
        for (const auto& [j, c] : ad(x, bracket(y, z))) accumulate(total, j, c);
        for (const auto& [j, c] : ad(y, bracket(z, x))) accumulate(total, j, c);
        for (const auto& [j, c] : ad(z, bracket(x, y))) accumulate(total, j, c);
        if (!total.empty()) throw std::logic_error("bracket table fails the Jacobi identity");
      }
    }
  }
}

// SymPoly --------------------------------------------------------------------

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

SymPoly::SymPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("invalid SymPoly shape");
}

SymPoly SymPoly::power(int nvars, int idx, int exponent) {
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m.at(idx) = static_cast<std::uint16_t>(exponent);
  return monomial(std::move(m));
}

SymPoly SymPoly::monomial(Monomial m, Rational coeff) {
  SymPoly p(static_cast<int>(m.size()), monomial_degree(m));
  p.add_term(m, coeff);
  return p;
}

void SymPoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_ || monomial_degree(m) != degree_)
    throw std::invalid_argument("term does not match polynomial shape");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SymPoly SymPoly::operator*(const SymPoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("SymPoly variable count mismatch");
  SymPoly out(nvars_, degree_ + other.degree_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      Monomial m(m1);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] + m2[i]);
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

SymPoly SymPoly::scaled(const Rational& c) const {
  SymPoly out(nvars_, degree_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

EpsWeight monomial_weight(const LieBasis& basis, const Monomial& m) {
  EpsWeight w(static_cast<std::size_t>(basis.rank()), 0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!m[j]) continue;
    const auto& bw = basis.weight(static_cast<int>(j));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += m[j] * bw[i];
  }
  return w;
}

std::optional<EpsWeight> poly_weight(const LieBasis& basis, const SymPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const auto w = monomial_weight(basis, p.terms().begin()->first);
  for (const auto& [m, c] : p.terms())
    if (monomial_weight(basis, m) != w) return std::nullopt;
  return w;
}

SymPoly adjoint_on_sym(const LieBasis& basis, int x, const SymPoly& p) {
  if (p.nvars() != basis.dim()) throw std::invalid_argument("polynomial is over a different basis");
  SymPoly out(p.nvars(), p.degree());
  for (const auto& [m, c] : p.terms()) {
    for (int j = 0; j < basis.dim(); ++j) {
      if (!m[j]) continue;
      const Rational factor = c * m[j];
      for (const auto& [l, s] : basis.bracket(x, j)) {
        Monomial next(m);
        --next[j];
        ++next[l];
        out.add_term(next, factor * s);
      }
    }
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  if (degree > std::numeric_limits<std::uint16_t>::max())
    throw std::invalid_argument("degree too large for exponent storage");
  std::vector<Monomial> out;
  Monomial current(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == nvars - 1) {
      current[i] = static_cast<std::uint16_t>(remaining);
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, remaining - e);
    }
  };
  if (nvars > 0) rec(0, degree);
  return out;
}

std::string to_string(const LieBasis& basis, const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    out += c.str();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!m[j]) continue;
      out += "*" + basis.label(static_cast<int>(j));
      if (m[j] > 1) out += "^" + std::to_string(m[j]);
    }
  }
  return out;
}

}  // namespace c2zhu
