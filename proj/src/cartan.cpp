#include "crys/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "crys/rational.hpp"

namespace crys {

namespace {

IntMatrix transpose(const IntMatrix& a) {
  const size_t m = a.size();
  IntMatrix t(m, std::vector<long>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

// Primitive positive kernel vector of an integer matrix whose kernel is
// one-dimensional. Fraction-free elimination, exact back-substitution.
std::vector<long> kernel_vector(const IntMatrix& a0) {
  const int m = static_cast<int>(a0.size());
  std::vector<std::vector<Int>> a(m, std::vector<Int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = a0[i][j];

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < m; ++col) {
    int p = -1;
    for (int r = row; r < m; ++r)
      if (a[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    for (int r = row + 1; r < m; ++r) {
      if (a[r][col] == 0) continue;
      const Int f1 = a[row][col], f2 = a[r][col];
      for (int c = 0; c < m; ++c) a[r][c] = a[r][c] * f1 - a[row][c] * f2;
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != m - 1)
    throw std::invalid_argument("kac_labels: kernel dimension is not 1");

  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  for (int c = 0; c < m; ++c)
    if (!is_pivot[c]) free_col = c;

  std::vector<Rat> x(m, Rat(0));
  x[free_col] = 1;
  for (int r = row - 1; r >= 0; --r) {
    const int pc = pivot_col[r];
    Rat acc(0);
    for (int c = pc + 1; c < m; ++c) acc += Rat(a[r][c]) * x[c];
    x[pc] = -acc / Rat(a[r][pc]);
  }

  Int lcm(1);
  for (const Rat& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> vi(m);
  Int g(0);
  for (int c = 0; c < m; ++c) {
    vi[c] = x[c].get_num() * (lcm / x[c].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), vi[c].get_mpz_t());
  }
  if (g > 1)
    for (Int& v : vi) v /= g;
  bool has_neg = false, has_pos = false;
  for (const Int& v : vi) (v < 0 ? has_neg : has_pos) = true;
  if (has_neg && has_pos)
    throw std::invalid_argument("kac_labels: kernel vector changes sign");
  std::vector<long> out(m);
  for (int c = 0; c < m; ++c) out[c] = (has_neg ? -vi[c] : vi[c]).get_si();
  return out;
}

}  // namespace

CartanData cartan_matrix(Algebra alg, int n) {
  if (n < 2) throw std::invalid_argument("cartan_matrix: rank must be >= 2");
  const int m = n + 1;
  IntMatrix a(m, std::vector<long>(m, 0));
  for (int i = 0; i < m; ++i) a[i][i] = 2;
  a[0][1] = -1;
  a[1][0] = -2;
  for (int i = 1; i + 1 < n; ++i) {
    a[i][i + 1] = -1;
    a[i + 1][i] = -1;
  }
  a[n - 1][n] = -2;
  a[n][n - 1] = -1;

  CartanData cd;
  cd.rank = n;
  cd.a = (alg == Algebra::cn1) ? std::move(a) : transpose(a);
  auto labels = kac_labels(cd.a);
  cd.marks = std::move(labels.first);
  cd.comarks = std::move(labels.second);
  return cd;
}

std::pair<std::vector<long>, std::vector<long>> kac_labels(const IntMatrix& a) {
  return {kernel_vector(a), kernel_vector(transpose(a))};
}

long level(const CartanData& cd, const Weight& w) {
  long s = 0;
  for (int i = 0; i < cd.nodes(); ++i) s += cd.comarks[i] * w.coeffs[i];
  return s;
}

Weight reflect(const CartanData& cd, int i, const Weight& w) {
  if (i < 0 || i >= cd.nodes()) throw std::out_of_range("reflect: bad node");
  // s_i(lambda) = lambda - lambda_i * alpha_i, with alpha_i = column i of A
  Weight out = w;
  const long li = w.coeffs[i];
  for (int j = 0; j < cd.nodes(); ++j) out.coeffs[j] -= li * cd.a[j][i];
  return out;
}

Weight apply_sigma(const Weight& w) {
  Weight out = w;
  std::reverse(out.coeffs.begin(), out.coeffs.end());
  return out;
}

Weight apply_translation(const CartanData& cd, Translation t, const Weight& w) {
  const int n = cd.rank;
  Weight cur = w;
  // The word is a chain of blocks; composing right to left means the longest
  // block acts first, and within a block the outermost letter acts first.
  if (t == Translation::varpi_n) {
    for (int k = 1; k <= n; ++k)
      for (int i = n; i >= k; --i) cur = reflect(cd, i, cur);
  } else {
    for (int k = n - 1; k >= 0; --k)
      for (int i = 0; i <= k; ++i) cur = reflect(cd, i, cur);
  }
  return apply_sigma(cur);
}

std::vector<long> weight_to_eps(const Weight& w) {
  const int n = static_cast<int>(w.coeffs.size()) - 1;
  std::vector<long> eps(n);
  long acc = 0;
  for (int i = n; i >= 1; --i) {
    acc += w.coeffs[i];
    eps[i - 1] = acc;
  }
  return eps;
}

Weight weight_from_eps(const std::vector<long>& eps) {
  const int n = static_cast<int>(eps.size());
  Weight w;
  w.coeffs.assign(n + 1, 0);
  for (int i = 1; i < n; ++i) w.coeffs[i] = eps[i - 1] - eps[i];
  w.coeffs[n] = eps[n - 1];
  long s = 0;
  for (int i = 1; i <= n; ++i) s += w.coeffs[i];
  w.coeffs[0] = -s;
  return w;
}

std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.coeffs[i]);
  }
  return s + ")";
}

}  // namespace crys
