#include "crys/spin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crys {

int letter_rank(int n, int letter) {
  return letter > 0 ? letter : 2 * n + 1 + letter;
}

static int rank_to_letter(int n, int r) { return r <= n ? r : r - (2 * n + 1); }

bool is_valid(int n, const SpinTableau& t) {
  if (static_cast<int>(t.entries.size()) != n) return false;
  for (int e : t.entries)
    if (e == 0 || e > n || e < -n) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (letter_rank(n, t.entries[i]) >= letter_rank(n, t.entries[i + 1])) return false;
  // pair admissibility: i_k = p at position k, i_l = pbar at position l (both
  // 1-based) requires k + (n - l + 1) <= p
  for (int a = 0; a < n; ++a) {
    const int p = t.entries[a];
    if (p <= 0) continue;
    for (int b = a + 1; b < n; ++b) {
      if (t.entries[b] == -p) {
        if ((a + 1) + (n - (b + 1) + 1) > p) return false;
      }
    }
  }
  return true;
}

std::vector<SpinTableau> enumerate_tableaux(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("enumerate_tableaux: need 2 <= n <= 10");
  std::vector<SpinTableau> out;
  std::vector<int> ranks(n);
  for (int i = 0; i < n; ++i) ranks[i] = i + 1;
  // enumerate n-subsets of {1..2n} in lexicographic order
  while (true) {
    SpinTableau t;
    t.entries.resize(n);
    for (int i = 0; i < n; ++i) t.entries[i] = rank_to_letter(n, ranks[i]);
    if (is_valid(n, t)) out.push_back(std::move(t));
    int i = n - 1;
    while (i >= 0 && ranks[i] == 2 * n - (n - 1 - i)) --i;
    if (i < 0) break;
    ++ranks[i];
    for (int j = i + 1; j < n; ++j) ranks[j] = ranks[j - 1] + 1;
  }
  return out;
}

std::vector<long> eps_weight(int n, const SpinTableau& t) {
  std::vector<long> mu(n, 0);
  for (int e : t.entries) {
    if (e > 0)
      ++mu[e - 1];
    else
      --mu[-e - 1];
  }
  return mu;
}

Weight weight(int n, const SpinTableau& t) { return weight_from_eps(eps_weight(n, t)); }

namespace {

int find_letter(const SpinTableau& t, int letter) {
  for (size_t i = 0; i < t.entries.size(); ++i)
    if (t.entries[i] == letter) return static_cast<int>(i);
  return -1;
}

SpinTableau with_entry(const SpinTableau& t, int pos, int letter) {
  SpinTableau out = t;
  out.entries[pos] = letter;
  return out;
}

}  // namespace

std::optional<SpinTableau> f_tilde(int n, int k, const SpinTableau& t) {
  const int last = n - 1;
  if (k == 0) {
    if (t.entries[last] != -1) return std::nullopt;
    SpinTableau out;
    out.entries.push_back(1);
    out.entries.insert(out.entries.end(), t.entries.begin(), t.entries.begin() + last);
    return out;
  }
  if (k == n) {
    const int j = find_letter(t, n);
    if (j < 0) return std::nullopt;
    if (j + 1 < n && t.entries[j + 1] == -n) return std::nullopt;
    return with_entry(t, j, -n);
  }
  // 1 <= k <= n-1: either k -> k+1 or bar(k+1) -> bar(k)
  {
    const int j = find_letter(t, k);
    if (j >= 0 && (j + 1 >= n || t.entries[j + 1] != k + 1)) {
      const int l = find_letter(t, -k);
      if (l < 0 || (l > 0 && t.entries[l - 1] == -(k + 1)))
        return with_entry(t, j, k + 1);
    }
  }
  {
    const int j = find_letter(t, -(k + 1));
    if (j >= 0 && (j + 1 >= n || t.entries[j + 1] != -k)) {
      const int l = find_letter(t, k);
      if (l < 0 || (l + 1 < n && t.entries[l + 1] == k + 1))
        return with_entry(t, j, -k);
    }
  }
  return std::nullopt;
}

std::optional<SpinTableau> e_tilde(int n, int k, const SpinTableau& t) {
  const int last = n - 1;
  if (k == 0) {
    if (t.entries[0] != 1) return std::nullopt;
    SpinTableau out;
    out.entries.assign(t.entries.begin() + 1, t.entries.end());
    out.entries.push_back(-1);
    return out;
  }
  if (k == n) {
    const int j = find_letter(t, -n);
    if (j < 0) return std::nullopt;
    if (j > 0 && t.entries[j - 1] == n) return std::nullopt;
    return with_entry(t, j, n);
  }
  {
    const int j = find_letter(t, k + 1);
    if (j >= 0 && (j == 0 || t.entries[j - 1] != k)) {
      const int l = find_letter(t, -k);
      if (l < 0 || (l > 0 && t.entries[l - 1] == -(k + 1)))
        return with_entry(t, j, k);
    }
  }
  {
    const int j = find_letter(t, -k);
    if (j >= 0 && (j == 0 || t.entries[j - 1] != -(k + 1))) {
      const int l = find_letter(t, k + 1);
      if (l < 0 || (l > 0 && t.entries[l - 1] == k))
        return with_entry(t, j, -(k + 1));
    }
  }
  return std::nullopt;
}

Int catalan(long k) {
  Int bin;
  mpz_bin_uiui(bin.get_mpz_t(), 2 * k, k);
  return bin / (k + 1);
}

Int weight_multiplicity(int n, const std::vector<long>& mu) {
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("weight_multiplicity: bad weight size");
  int singles = 0;
  for (long c : mu) {
    if (c < -1 || c > 1) return 0;
    if (c != 0) ++singles;
  }
  const int rest = n - singles;
  if (rest % 2 != 0) return 0;
  return catalan(rest / 2);
}

SpinTableau arcs_to_tableau(int n, const std::vector<int>& singles, const ArcDiagram& d) {
  const int m = static_cast<int>(d.nodes.size());
  if (m % 2 != 0 || static_cast<int>(d.arcs.size()) != m / 2)
    throw std::invalid_argument("arcs_to_tableau: need k arcs on 2k nodes");
  std::vector<int> degree(m, 0);
  for (auto [l, r] : d.arcs) {
    if (l < 0 || r < 0 || l >= m || r >= m || l >= r)
      throw std::invalid_argument("arcs_to_tableau: bad arc endpoints");
    ++degree[l];
    ++degree[r];
  }
  for (int deg : degree)
    if (deg != 1) throw std::invalid_argument("arcs_to_tableau: nodes must have degree 1");
  for (auto [l1, r1] : d.arcs)
    for (auto [l2, r2] : d.arcs)
      if (l1 < l2 && l2 < r1 && r1 < r2)
        throw std::invalid_argument("arcs_to_tableau: crossing arcs");

  std::vector<int> up, down;
  for (int s : singles) (s > 0 ? up : down).push_back(s > 0 ? s : -s);
  for (auto [l, r] : d.arcs) {
    const int p = d.nodes[r];
    up.push_back(p);
    down.push_back(p);
  }
  std::sort(up.begin(), up.end());
  std::sort(down.rbegin(), down.rend());
  SpinTableau t;
  for (int v : up) t.entries.push_back(v);
  for (int v : down) t.entries.push_back(-v);
  if (!is_valid(n, t))
    throw std::invalid_argument("arcs_to_tableau: inadmissible diagram");
  return t;
}

ArcDiagram tableau_to_arcs(int n, const SpinTableau& t) {
  if (!is_valid(n, t)) throw std::invalid_argument("tableau_to_arcs: invalid tableau");
  std::set<int> plus, minus;
  for (int e : t.entries) (e > 0 ? plus : minus).insert(std::abs(e));
  std::vector<int> pairs;
  std::set<int> used;
  for (int p : plus) {
    used.insert(p);
    if (minus.count(p)) pairs.push_back(p);
  }
  for (int q : minus) used.insert(q);
  ArcDiagram d;
  for (int v = 1; v <= n; ++v)
    if (pairs.end() != std::find(pairs.begin(), pairs.end(), v) || !used.count(v))
      d.nodes.push_back(v);
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) pos[d.nodes[i]] = i;
  // connect each pair value to the closest free node on its left
  std::vector<bool> free_node(d.nodes.size(), false);
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
    free_node[i] = !used.count(d.nodes[i]);
  for (int p : pairs) {
    int at = pos[p];
    int q = -1;
    for (int i = at - 1; i >= 0; --i)
      if (free_node[i]) {
        q = i;
        break;
      }
    if (q < 0) throw std::invalid_argument("tableau_to_arcs: no left node for a pair");
    free_node[q] = false;
    d.arcs.emplace_back(q, at);
  }
  return d;
}

std::string tableau_to_string(const SpinTableau& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.entries[i]);
  }
  return s + ")";
}

std::string crystal_graph_dot(int n) {
  const auto elems = enumerate_tableaux(n);
  std::map<SpinTableau, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i]] = i;
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    os << "  v" << i << " [label=\"[";
    for (size_t j = 0; j < elems[i].entries.size(); ++j) {
      if (j) os << ",";
      os << elems[i].entries[j];
    }
    os << "]\"];\n";
  }
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    for (int k = 0; k <= n; ++k)
      if (auto img = f_tilde(n, k, elems[i]))
        os << "  v" << i << " -> v" << index.at(*img) << " [label=\"f_" << k << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace crys
