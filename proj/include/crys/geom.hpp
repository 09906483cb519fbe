#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crys/cartan.hpp"
#include "crys/expr.hpp"
#include "crys/spin.hpp"

namespace crys {

// Positive-rational point of V1(x) (or V2(y)), stored in the fixed coordinate
// order of the corresponding family.
using GcPoint = std::vector<Rat>;

// The hand-coded formula family for one rank: coordinate-wise actions e_i^c
// (variables are the coordinates plus "c"), the decorations eps_i / gamma_i,
// the birational chart change sigma_bar with its inverse, and the V2-side
// e_0 action used for the conjugated route.
struct GcFamily {
  int n = 0;
  std::vector<std::string> coords;     // V1 coordinate names
  std::vector<std::string> v2_coords;  // V2 coordinate names
  std::vector<int> word;               // reduced word of t(varpi_n), V1 side
  std::vector<std::vector<RatExpr>> e_action;  // [i][coord]
  std::vector<RatExpr> eps;                    // [i]
  std::vector<RatExpr> gamma;                  // [i]
  std::vector<RatExpr> sigma_bar;              // y(x)
  std::vector<RatExpr> sigma_bar_inv;          // x(y)
  std::vector<RatExpr> e0_bar;                 // V2-side e_0^c
};

// n in {2,3,4}; throws std::invalid_argument otherwise.
const GcFamily& family(int n);

// Evaluate a coordinate-wise map at a point, with optional extra bindings
// (e.g. {"c", value}). One shared memo across components.
std::vector<Rat> apply_rat_map(const std::vector<RatExpr>& map,
                               const std::vector<std::string>& vars,
                               const std::vector<Rat>& point,
                               const RatExpr::Env& extra = {});

GcPoint gc_e(int n, int i, const Rat& c, const GcPoint& x);
Rat gc_eps(int n, int i, const GcPoint& x);
Rat gc_gamma(int n, int i, const GcPoint& x);
GcPoint sigma_bar_apply(int n, const GcPoint& x);
GcPoint sigma_bar_inv_apply(int n, const GcPoint& y);
// e_0^c via conjugation by sigma_bar; must agree with the closed form.
GcPoint gc_e0_conjugated(int n, const Rat& c, const GcPoint& x);

// Theorem-style generic Schubert-cell crystal on a reduced word: symbolic
// coordinate actions in variables c1..cl and "c". Throws when i does not
// occur in the word (for the e/eps formulas).
std::vector<RatExpr> schubert_e(const std::vector<int>& word, const IntMatrix& a, int i);
RatExpr schubert_eps(const std::vector<int>& word, const IntMatrix& a, int i);
RatExpr schubert_gamma(const std::vector<int>& word, const IntMatrix& a, int i);
std::vector<std::string> schubert_vars(std::size_t word_len);

// -------------------------------------------------------------- reports

struct RelationStat {
  std::string id;
  long samples = 0;
  long violations = 0;
  std::vector<std::string> witnesses;  // capped
};

struct AxiomReport {
  int n = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<RelationStat> relations;

  long total_violations() const {
    long v = 0;
    for (const auto& r : relations) v += r.violations;
    return v;
  }
};

// Samples random positive rational points / parameters and checks every
// geometric-crystal identity keyed to the Cartan matrix, exactly.
AxiomReport verify_axioms(int n, long samples, std::uint64_t seed);

// ---------------------------------------------------- module expansion

// Finitely supported vector over the tableau basis with subtraction-free
// rational coefficients.
using ModuleVector = std::map<SpinTableau, RatExpr>;

// Y_i(c) = y_i(1/c) alphacheck_i(c) acting through the crystal strings with
// divided-power coefficients.
ModuleVector apply_y(int n, int i, const RatExpr& c, const ModuleVector& v);

// Symbolic expansion of V1(x) (n in {2,3}).
ModuleVector expand_v1(int n);
// V2(y) expansion, used as an extra oracle.
ModuleVector expand_v2(int n);

}  // namespace crys
