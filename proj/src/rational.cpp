#include "ttower/rational.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ttower {

int rat_rank(RatMat m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rat pv = m[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rat f = m[r][c] / pv;
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

RatMat kernel_basis(RatMat m, int cols) {
  const int rows = static_cast<int>(m.size());
  for (auto& row : m) row.resize(cols, Rat(0));
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rat pv = m[rank][c];
    for (auto& x : m[rank]) x /= pv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  RatMat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatRow v(cols, Rat(0));
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Phase-1 simplex on {x >= 0 : a x = b}; returns true iff feasible.
bool simplex_phase1(RatMat a, RatRow b) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return true;
  const int n = static_cast<int>(a[0].size());
  for (int r = 0; r < m; ++r) {
    if (b[r] < 0) {
      b[r] = -b[r];
      for (auto& x : a[r]) x = -x;
    }
  }
  // Tableau with artificial basis: columns 0..n-1 original, n..n+m-1 artificial.
  const int total = n + m;
  RatMat t(m, RatRow(total + 1, Rat(0)));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) t[r][c] = a[r][c];
    t[r][n + r] = 1;
    t[r][total] = b[r];
  }
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n + r;
  // Objective: minimize sum of artificials. Reduced costs for phase 1.
  RatRow cost(total + 1, Rat(0));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= total; ++c) cost[c] += t[r][c];

  while (true) {
    int enter = -1;
    for (int c = 0; c < total; ++c) {
      if (c >= n) continue;  // never re-enter artificials
      if (cost[c] > 0) {
        enter = c;  // Bland: smallest index
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rat ratio = t[r][total] / t[r][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen in phase 1
    const Rat pv = t[leave][enter];
    for (auto& x : t[leave]) x /= pv;
    for (int r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rat f = t[r][enter];
      for (int c = 0; c <= total; ++c) t[r][c] -= f * t[leave][c];
    }
    const Rat f = cost[enter];
    for (int c = 0; c <= total; ++c) cost[c] -= f * t[leave][c];
    basis[leave] = enter;
  }
  return cost[total] == 0;
}

}  // namespace

bool feasible_nonneg(const RatMat& a, const RatRow& b) {
  return simplex_phase1(a, b);
}

bool in_nonneg_cone(const std::vector<std::vector<long long>>& gens,
                    const std::vector<long long>& w) {
  if (gens.empty())
    return std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(gens.size());
  RatMat a(n, RatRow(k, Rat(0)));
  RatRow b(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    b[i] = w[i];
    for (int j = 0; j < k; ++j) a[i][j] = gens[j][i];
  }
  return feasible_nonneg(a, b);
}

std::vector<Int> primitive_integral(const RatRow& v) {
  Int lcm_den = 1;
  for (const auto& x : v) {
    Int d = boost::multiprecision::denominator(x);
    lcm_den = boost::multiprecision::lcm(lcm_den, d);
  }
  std::vector<Int> out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    Int num = boost::multiprecision::numerator(x) *
              (lcm_den / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, num);
    out.push_back(num);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

std::string rat_to_string(const Rat& r) {
  return r.str();
}

}  // namespace ttower
