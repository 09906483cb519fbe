#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crys/cartan.hpp"

namespace crys {

// Element of B^{n,l} (level set) or of the limit B^{n,inf} (level absent).
// Entries b_{ij} for 1 <= i <= n, i <= j <= i+n are stored flat.
struct PcElement {
  int n = 0;
  std::optional<int> level;
  std::vector<long> b;

  long& at(int i, int j) { return b[(i - 1) * (n + 1) + (j - i)]; }
  long at(int i, int j) const { return b[(i - 1) * (n + 1) + (j - i)]; }

  bool operator==(const PcElement&) const = default;
  bool operator<(const PcElement& o) const { return b < o.b; }
};

PcElement pc_zero(int n);  // b_inf

bool is_element(const PcElement& b);

// Kashiwara operators; total on B^{n,inf}, partial on B^{n,l}.
std::optional<PcElement> pc_e(int k, const PcElement& b);
std::optional<PcElement> pc_f(int k, const PcElement& b);

long pc_eps(int k, const PcElement& b);
long pc_phi(int k, const PcElement& b);
long pc_wt(int k, const PcElement& b);

// All of B^{n,l} by polytope scan (n in {2,3}, l >= 1 small), deterministic
// order. Throws std::invalid_argument for unsupported parameters.
std::vector<PcElement> enumerate_level(int n, int l);

// Independent enumeration: closure of one element under e/f.
std::vector<PcElement> enumerate_level_closure(int n, int l);

// eps(b) and phi(b) as D_{n+1}^(2) weights in Lambda coordinates.
Weight pc_eps_weight(const PcElement& b);
Weight pc_phi_weight(const PcElement& b);

// <c, eps(b)> with the D_{n+1}^(2) comarks.
long pc_eps_level(const PcElement& b);

std::vector<PcElement> minimal_elements(int n, int l);

// Level-l dominant weights of D_{n+1}^(2), lexicographic.
std::vector<Weight> dominant_weights(int n, int l);

std::string pc_to_string(const PcElement& b);
std::string pc_to_json(const PcElement& b);
std::string pc_graph_dot(int n, int l);

}  // namespace crys
