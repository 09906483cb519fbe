#include "crys/geom.hpp"

#include <sstream>
#include <stdexcept>

namespace crys {

std::vector<Rat> apply_rat_map(const std::vector<RatExpr>& map,
                               const std::vector<std::string>& vars,
                               const std::vector<Rat>& point, const RatExpr::Env& extra) {
  RatExpr::Env env = extra;
  for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = point[i];
  return RatExpr::eval_all(map, env);
}

GcPoint gc_e(int n, int i, const Rat& c, const GcPoint& x) {
  const GcFamily& f = family(n);
  return apply_rat_map(f.e_action.at(i), f.coords, x, {{"c", c}});
}

Rat gc_eps(int n, int i, const GcPoint& x) {
  const GcFamily& f = family(n);
  return apply_rat_map({f.eps.at(i)}, f.coords, x)[0];
}

Rat gc_gamma(int n, int i, const GcPoint& x) {
  const GcFamily& f = family(n);
  return apply_rat_map({f.gamma.at(i)}, f.coords, x)[0];
}

GcPoint sigma_bar_apply(int n, const GcPoint& x) {
  const GcFamily& f = family(n);
  return apply_rat_map(f.sigma_bar, f.coords, x);
}

GcPoint sigma_bar_inv_apply(int n, const GcPoint& y) {
  const GcFamily& f = family(n);
  return apply_rat_map(f.sigma_bar_inv, f.v2_coords, y);
}

GcPoint gc_e0_conjugated(int n, const Rat& c, const GcPoint& x) {
  const GcFamily& f = family(n);
  GcPoint y = sigma_bar_apply(n, x);
  GcPoint y2 = apply_rat_map(f.e0_bar, f.v2_coords, y, {{"c", c}});
  return sigma_bar_inv_apply(n, y2);
}

// ------------------------------------------------------- Schubert builder

std::vector<std::string> schubert_vars(std::size_t word_len) {
  std::vector<std::string> v;
  for (std::size_t m = 1; m <= word_len; ++m) v.push_back("c" + std::to_string(m));
  return v;
}

namespace {

// 1 / (c_1^{a_{i_1,i}} ... c_{m-1}^{a_{i_{m-1},i}} c_m), 1-based m
RatExpr chain_term(const std::vector<int>& word, const IntMatrix& a, int i, std::size_t m) {
  RatExpr denom = RatExpr::var("c" + std::to_string(m));
  for (std::size_t t = 1; t < m; ++t) {
    const long e = a[word[t - 1]][i];
    if (e == 0) continue;
    denom = denom * RatExpr::var("c" + std::to_string(t)).pow(e);
  }
  return RatExpr::constant(1) / denom;
}

RatExpr sum_or_throw(const std::vector<RatExpr>& terms, const char* what) {
  if (terms.empty())
    throw std::invalid_argument(std::string("schubert: empty sum for ") + what);
  RatExpr s = terms[0];
  for (size_t t = 1; t < terms.size(); ++t) s = s + terms[t];
  return s;
}

}  // namespace

std::vector<RatExpr> schubert_e(const std::vector<int>& word, const IntMatrix& a, int i) {
  const std::size_t l = word.size();
  const RatExpr c = RatExpr::var("c");
  std::vector<RatExpr> out;
  bool occurs = false;
  for (int w : word) occurs |= (w == i);
  if (!occurs) throw std::invalid_argument("schubert_e: index not in word");
  for (std::size_t j = 1; j <= l; ++j) {
    std::vector<RatExpr> num, den;
    for (std::size_t m = 1; m <= l; ++m) {
      if (word[m - 1] != i) continue;
      const RatExpr term = chain_term(word, a, i, m);
      if (m <= j)
        num.push_back(c * term);
      else
        num.push_back(term);
      if (m < j)
        den.push_back(c * term);
      else
        den.push_back(term);
    }
    const RatExpr cj = RatExpr::var("c" + std::to_string(j));
    out.push_back(cj * sum_or_throw(num, "e") / sum_or_throw(den, "e"));
  }
  return out;
}

RatExpr schubert_eps(const std::vector<int>& word, const IntMatrix& a, int i) {
  std::vector<RatExpr> terms;
  for (std::size_t m = 1; m <= word.size(); ++m)
    if (word[m - 1] == i) terms.push_back(chain_term(word, a, i, m));
  return sum_or_throw(terms, "eps");
}

RatExpr schubert_gamma(const std::vector<int>& word, const IntMatrix& a, int i) {
  RatExpr g = RatExpr::constant(1);
  for (std::size_t m = 1; m <= word.size(); ++m) {
    const long e = a[word[m - 1]][i];
    if (e == 0) continue;
    g = g * RatExpr::var("c" + std::to_string(m)).pow(e);
  }
  return g;
}

// ---------------------------------------------------------- verify_axioms

namespace {

std::string point_to_string(const GcPoint& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i].get_str();
  }
  return s + ")";
}

struct Checker {
  RelationStat stat;
  static constexpr int kMaxWitnesses = 3;

  void record(bool ok, const GcPoint& x, const Rat& c, const Rat& d) {
    ++stat.samples;
    if (ok) return;
    ++stat.violations;
    if (static_cast<int>(stat.witnesses.size()) < kMaxWitnesses)
      stat.witnesses.push_back("x=" + point_to_string(x) + " c=" + c.get_str() +
                               " d=" + d.get_str());
  }
};

bool points_equal(const GcPoint& a, const GcPoint& b) { return a == b; }

}  // namespace

AxiomReport verify_axioms(int n, long samples, std::uint64_t seed) {
  const GcFamily& f = family(n);
  const CartanData cd = cartan_matrix(Algebra::cn1, n);
  const int m = n + 1;

  std::map<std::string, Checker> checks;
  auto check = [&](const std::string& id, bool ok, const GcPoint& x, const Rat& c,
                   const Rat& d) { checks[id].record(ok, x, c, d); };

  Rng rng(seed);
  const size_t dim = f.coords.size();
  for (long s = 0; s < samples; ++s) {
    GcPoint x(dim);
    for (auto& v : x) v = rng.positive_rational();
    const Rat c = rng.positive_rational();
    const Rat d = rng.positive_rational();

    std::vector<GcPoint> ex(m);
    std::vector<Rat> gamma0(m), eps0(m);
    for (int i = 0; i < m; ++i) {
      ex[i] = gc_e(n, i, c, x);
      gamma0[i] = gc_gamma(n, i, x);
      eps0[i] = gc_eps(n, i, x);
    }

    for (int i = 0; i < m; ++i) {
      bool positive = true;
      for (const Rat& v : ex[i]) positive &= (v > 0);
      check("positivity:e_" + std::to_string(i), positive, x, c, d);

      // (2): gamma_j(e_i^c x) = c^{a_ij} gamma_j(x)
      for (int j = 0; j < m; ++j) {
        const Rat lhs = gc_gamma(n, j, ex[i]);
        const Rat rhs = rat_pow(c, cd.a[i][j]) * gamma0[j];
        check("gamma:e_" + std::to_string(i) + ":gamma_" + std::to_string(j), lhs == rhs, x,
              c, d);
      }
      // (3) first part
      check("eps:e_" + std::to_string(i), gc_eps(n, i, ex[i]) == eps0[i] / c, x, c, d);
    }
    // (3) second part: eps_i invariant under e_j when a_ij = a_ji = 0
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && cd.a[i][j] == 0 && cd.a[j][i] == 0)
          check("eps-inv:eps_" + std::to_string(i) + ":e_" + std::to_string(j),
                gc_eps(n, i, ex[j]) == eps0[i], x, c, d);

    // (4): Verma relations, selected by the Cartan entries
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const long aij = cd.a[i][j], aji = cd.a[j][i];
        const std::string id =
            "verma:" + std::to_string(i) + "," + std::to_string(j);
        if (aij == 0 && aji == 0) {
          GcPoint lhs = gc_e(n, i, c, gc_e(n, j, d, x));
          GcPoint rhs = gc_e(n, j, d, gc_e(n, i, c, x));
          check(id + ":commute", points_equal(lhs, rhs), x, c, d);
        } else if (aij == -1 && aji == -1) {
          // e_i^{c1} e_j^{c1 c2} e_i^{c2} = e_j^{c2} e_i^{c1 c2} e_j^{c1}
          GcPoint lhs = gc_e(n, i, c, gc_e(n, j, c * d, gc_e(n, i, d, x)));
          GcPoint rhs = gc_e(n, j, d, gc_e(n, i, c * d, gc_e(n, j, c, x)));
          check(id + ":braid3", points_equal(lhs, rhs), x, c, d);
        } else {
          // orient so that a_{pq} = -2 (or -3), a_{qp} = -1
          int p = i, q = j;
          if (!((cd.a[p][q] == -2 || cd.a[p][q] == -3) && cd.a[q][p] == -1)) std::swap(p, q);
          const long apq = cd.a[p][q];
          if (apq == -2 && cd.a[q][p] == -1) {
            // e_p^{c1} e_q^{c1^2 c2} e_p^{c1 c2} e_q^{c2}
            //   = e_q^{c2} e_p^{c1 c2} e_q^{c1^2 c2} e_p^{c1}
            const Rat c1 = c, c2 = d;
            GcPoint lhs = gc_e(
                n, p, c1,
                gc_e(n, q, c1 * c1 * c2, gc_e(n, p, c1 * c2, gc_e(n, q, c2, x))));
            GcPoint rhs = gc_e(
                n, q, c2,
                gc_e(n, p, c1 * c2, gc_e(n, q, c1 * c1 * c2, gc_e(n, p, c1, x))));
            check(id + ":braid4", points_equal(lhs, rhs), x, c, d);
          } else if (apq == -3 && cd.a[q][p] == -1) {
            const Rat c1 = c, c2 = d;
            const Rat c13 = c1 * c1 * c1;
            GcPoint lhs = gc_e(
                n, p, c1,
                gc_e(n, q, c13 * c2,
                     gc_e(n, p, c1 * c1 * c2,
                          gc_e(n, q, c13 * c2 * c2, gc_e(n, p, c1 * c2, gc_e(n, q, c2, x))))));
            GcPoint rhs = gc_e(
                n, q, c2,
                gc_e(n, p, c1 * c2,
                     gc_e(n, q, c13 * c2 * c2,
                          gc_e(n, p, c1 * c1 * c2, gc_e(n, q, c13 * c2, gc_e(n, p, c1, x))))));
            check(id + ":braid6", points_equal(lhs, rhs), x, c, d);
          } else {
            check(id + ":unsupported-pair", false, x, c, d);
          }
        }
      }
    }
  }

  AxiomReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  for (auto& [id, ch] : checks) {
    ch.stat.id = id;
    rep.relations.push_back(std::move(ch.stat));
  }
  return rep;
}

// ------------------------------------------------------ module expansion

ModuleVector apply_y(int n, int i, const RatExpr& c, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [t, coeff] : v) {
    // alphacheck_i(c) scales by c^{<wt, alphacheck_i>}
    const Weight mu = weight(n, t);
    const long h = mu.coeffs[i];
    RatExpr scaled = h == 0 ? coeff : coeff * c.pow(h);

    // y_i(1/c) = sum_k c^{-k} f_i^k / k!, following the i-string
    long depth = 0;
    {
      SpinTableau up = t;
      while (auto prev = e_tilde(n, i, up)) {
        up = *prev;
        ++depth;
      }
    }
    SpinTableau cur = t;
    long k = 0;
    while (true) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), depth + k, k);
      RatExpr term = scaled;
      if (binom != 1) term = term * RatExpr::constant(Rat(binom));
      if (k > 0) term = term * c.pow(-k);
      auto it = out.find(cur);
      if (it == out.end())
        out.emplace(cur, term);
      else
        it->second = it->second + term;
      auto next = f_tilde(n, i, cur);
      if (!next) break;
      cur = *next;
      ++k;
    }
  }
  return out;
}

namespace {

ModuleVector expand_word(int n, const std::vector<int>& word,
                         const std::vector<std::string>& coords, const SpinTableau& start) {
  ModuleVector v;
  v.emplace(start, RatExpr::constant(1));
  for (std::size_t m = word.size(); m-- > 0;)
    v = apply_y(n, word[m], RatExpr::var(coords[m]), v);
  return v;
}

}  // namespace

ModuleVector expand_v1(int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("expand_v1: n must be 2 or 3");
  const GcFamily& f = family(n);
  SpinTableau highest;
  for (int i = 1; i <= n; ++i) highest.entries.push_back(i);
  return expand_word(n, f.word, f.coords, highest);
}

ModuleVector expand_v2(int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("expand_v2: n must be 2 or 3");
  const GcFamily& f = family(n);
  std::vector<int> word;
  for (int w : f.word) word.push_back(n - w);
  SpinTableau lowest;
  for (int i = n; i >= 1; --i) lowest.entries.push_back(-i);
  return expand_word(n, word, f.v2_coords, lowest);
}

}  // namespace crys
