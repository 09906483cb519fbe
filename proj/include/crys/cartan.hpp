#pragma once

#include <string>
#include <utility>
#include <vector>

namespace crys {

using IntMatrix = std::vector<std::vector<long>>;

enum class Algebra { cn1, dn1_2_dual };

// Affine Cartan datum: (n+1)x(n+1) matrix a_ij over nodes 0..n together with
// the marks (coefficients of the null root) and comarks (coefficients of the
// canonical central element).
struct CartanData {
  int rank = 0;  // number of nonzero Dynkin nodes; matrix is (rank+1)^2
  IntMatrix a;
  std::vector<long> marks;
  std::vector<long> comarks;

  int nodes() const { return rank + 1; }
};

// C_n^(1), or its Langlands dual D_{n+1}^(2) (transposed matrix, labels
// swapped). Throws std::invalid_argument for n < 2.
CartanData cartan_matrix(Algebra alg, int n);

// Primitive positive integer null vectors of A and A^T, computed by
// fraction-free elimination. Throws std::invalid_argument when the kernel is
// not one-dimensional (matrix not of affine type).
std::pair<std::vector<long>, std::vector<long>> kac_labels(const IntMatrix& a);

// Classical weight written in the Lambda basis, lambda = sum_i coeffs[i] L_i.
struct Weight {
  std::vector<long> coeffs;

  bool operator==(const Weight&) const = default;
};

long level(const CartanData& cd, const Weight& w);

// Simple reflection s_i; throws std::out_of_range for a bad node index.
Weight reflect(const CartanData& cd, int i, const Weight& w);

// Diagram automorphism i <-> n-i (coefficient reversal).
Weight apply_sigma(const Weight& w);

enum class Translation { varpi_n, varpi_n_check };

// The translation word sigma s_n s_{n-1} s_n ... s_1...s_n (resp. the
// 0-anchored mirror word for varpi_n_check), applied by composing the simple
// reflections right to left.
Weight apply_translation(const CartanData& cd, Translation t, const Weight& w);

// epsilon-basis view of the classical part (coeffs 1..n); the level-0 affine
// weight corresponding to an epsilon vector fixes coeff 0 so all comark
// contributions cancel.
std::vector<long> weight_to_eps(const Weight& w);
Weight weight_from_eps(const std::vector<long>& eps);

std::string weight_to_string(const Weight& w);

}  // namespace crys
