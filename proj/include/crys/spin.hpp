#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crys/cartan.hpp"
#include "crys/rational.hpp"

namespace crys {

// Element of B(varpi_n): strictly increasing n-tuple over the signed alphabet
// 1 < 2 < ... < n < -n < ... < -1, where -k encodes the barred letter.
struct SpinTableau {
  std::vector<int> entries;

  auto operator<=>(const SpinTableau&) const = default;
};

// Position of a letter in the total order, 1..2n.
int letter_rank(int n, int letter);

bool is_valid(int n, const SpinTableau& t);

// All elements, lexicographic in letter rank. Throws std::invalid_argument
// outside 2 <= n <= 10.
std::vector<SpinTableau> enumerate_tableaux(int n);

// Weight in epsilon coordinates (size n vector).
std::vector<long> eps_weight(int n, const SpinTableau& t);

// Level-zero affine weight in Lambda coordinates.
Weight weight(int n, const SpinTableau& t);

std::optional<SpinTableau> f_tilde(int n, int k, const SpinTableau& t);
std::optional<SpinTableau> e_tilde(int n, int k, const SpinTableau& t);

Int catalan(long k);

// |B(varpi_n)_mu| for mu given in epsilon coordinates.
Int weight_multiplicity(int n, const std::vector<long>& mu);

// Noncrossing arc diagram on the nodes not pinned down by the singles of a
// weight; arcs are 0-based (left, right) index pairs into `nodes`.
struct ArcDiagram {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> arcs;
};

// singles are signed letters (+p unbarred, -p barred). Throws
// std::invalid_argument on crossing arcs or inconsistent data.
SpinTableau arcs_to_tableau(int n, const std::vector<int>& singles, const ArcDiagram& d);
ArcDiagram tableau_to_arcs(int n, const SpinTableau& t);

std::string tableau_to_string(const SpinTableau& t);

// DOT export of the full crystal graph, edges labeled f_k.
std::string crystal_graph_dot(int n);

}  // namespace crys
