#include <stdexcept>

#include "crys/geom.hpp"

// The three hand-coded formula families. Shared subexpressions are named
// local values so the built DAGs reuse them; evaluation cost then tracks the
// printed formula size, not the expanded tree.

namespace crys {

namespace {

RatExpr V(const char* s) { return RatExpr::var(s); }
RatExpr K(long num, long den = 1) { return RatExpr::constant(num, den); }

GcFamily make_family2() {
  GcFamily f;
  f.n = 2;
  f.coords = {"x22", "x11", "x21"};
  f.v2_coords = {"y02", "y11", "y01"};
  f.word = {2, 1, 2};

  const RatExpr x22 = V("x22"), x11 = V("x11"), x21 = V("x21"), c = V("c");

  const RatExpr c2 = (c * x21 * x22 + x11.pow(2)) / (x21 * x22 + x11.pow(2));

  f.e_action.resize(3);
  f.e_action[0] = {(c2 / c) * x22, x11 / c, x21 / c2};
  f.e_action[1] = {x22, c * x11, x21};
  f.e_action[2] = {c2 * x22, x11, (c / c2) * x21};

  f.eps.resize(3);
  f.eps[0] = x21 + x11.pow(2) / x22;
  f.eps[1] = x22 / x11;
  f.eps[2] = (x21 * x22 + x11.pow(2)) / (x22.pow(2) * x21);

  f.gamma.resize(3);
  f.gamma[0] = K(1) / x11.pow(2);
  f.gamma[1] = x11.pow(2) / (x21 * x22);
  f.gamma[2] = x21.pow(2) * x22.pow(2) / x11.pow(2);

  f.sigma_bar = {K(1) / x21, x11 / (x21 * x22), K(1) / x22};

  const RatExpr y02 = V("y02"), y11 = V("y11"), y01 = V("y01");
  f.sigma_bar_inv = {K(1) / y01, y11 / (y01 * y02), K(1) / y02};

  const RatExpr c0b = (c * y01 * y02 + y11.pow(2)) / (y01 * y02 + y11.pow(2));
  f.e0_bar = {c0b * y02, y11, (c / c0b) * y01};
  return f;
}

GcFamily make_family3() {
  GcFamily f;
  f.n = 3;
  f.coords = {"x33", "x22", "x32", "x11", "x21", "x31"};
  f.v2_coords = {"y03", "y12", "y02", "y21", "y11", "y01"};
  f.word = {3, 2, 3, 1, 2, 3};

  const RatExpr x33 = V("x33"), x22 = V("x22"), x32 = V("x32"), x11 = V("x11"),
                x21 = V("x21"), x31 = V("x31"), c = V("c");

  const RatExpr c2 = (c * x21 * x22 + x32 * x11) / (x21 * x22 + x32 * x11);

  const RatExpr c3t1 = x32.pow(2) * x31 * x33;
  const RatExpr c3t2 = x22.pow(2) * x31 * x32;
  const RatExpr c3t3 = x22.pow(2) * x21.pow(2);
  const RatExpr c3 = c3t1 + c3t2 + c3t3;
  const RatExpr c31 = c * c3t1 + c3t2 + c3t3;
  const RatExpr c32 = c * c3t1 + c * c3t2 + c3t3;

  // the five terms of eps_0, with progressive c for the e_0 coefficients
  const RatExpr t1 = x31;
  const RatExpr t2 = x21.pow(2) / x32;
  const RatExpr t3 = K(2) * x21 * x11 / x22;
  const RatExpr t4 = x11.pow(2) * x32 / x22.pow(2);
  const RatExpr t5 = x11.pow(2) / x33;
  const RatExpr c2p = t1 + t2 + t3 + t4 + t5;
  const RatExpr c21p = c * t1 + t2 + t3 + t4 + t5;
  const RatExpr c24p = c * t1 + c * t2 + c * t3 + c * t4 + t5;

  const RatExpr u = x21 * x22 + x11 * x32;
  const RatExpr mix = x21 * x22 * c24p + x11 * x32 * c21p;

  f.e_action.resize(4);
  f.e_action[0] = {(c24p / (c * c2p)) * x33,
                   x22 * mix / (u * c * c2p),
                   (c21p / c24p) * x32,
                   x11 / c,
                   x21 * (u * c2p) / mix,
                   (c2p / c21p) * x31};
  f.e_action[1] = {x33, x22, x32, c * x11, x21, x31};
  f.e_action[2] = {x33, c2 * x22, x32, x11, (c / c2) * x21, x31};
  f.e_action[3] = {(c31 / c3) * x33, x22, (c32 / c31) * x32, x11, x21, (c * c3 / c32) * x31};

  f.eps.resize(4);
  f.eps[0] = x31 + u.pow(2) / (x22.pow(2) * x32) + x11.pow(2) / x33;
  f.eps[1] = x22 / x11;
  f.eps[2] = (x33 * x22 * x21 + x33 * x32 * x11) / (x22.pow(2) * x21);
  f.eps[3] = (x33 * x32.pow(2) * x31 + x22.pow(2) * x32 * x31 + x22.pow(2) * x21.pow(2)) /
             (x33.pow(2) * x32.pow(2) * x31);

  f.gamma.resize(4);
  f.gamma[0] = K(1) / x11.pow(2);
  f.gamma[1] = x11.pow(2) / (x21 * x22);
  f.gamma[2] = x21.pow(2) * x22.pow(2) / (x31 * x32 * x33 * x11);
  f.gamma[3] = x31.pow(2) * x32.pow(2) * x33.pow(2) / (x21.pow(2) * x22.pow(2));

  f.sigma_bar = {K(1) / x31,
                 u / (x31 * x32 * x22),
                 K(1) / x32,
                 x21 * x22 / (x31 * x32 * x33),
                 x11 * x22 / (x33 * u),
                 K(1) / x33};

  const RatExpr y03 = V("y03"), y12 = V("y12"), y02 = V("y02"), y21 = V("y21"),
                y11 = V("y11"), y01 = V("y01");
  const RatExpr v = y21 * y02 + y11 * y12;
  f.sigma_bar_inv = {K(1) / y01,
                     v / (y01 * y02 * y12),
                     K(1) / y02,
                     y11 * y12 / (y01 * y02 * y03),
                     y21 * y12 / (y03 * v),
                     K(1) / y03};

  const RatExpr b1 = y03 * y02.pow(2) * y01;
  const RatExpr b2 = y12.pow(2) * y02 * y01;
  const RatExpr b3 = y12.pow(2) * y11.pow(2);
  const RatExpr c0 = b1 + b2 + b3;
  const RatExpr c01 = c * b1 + b2 + b3;
  const RatExpr c02 = c * b1 + c * b2 + b3;
  f.e0_bar = {(c01 / c0) * y03, y12, (c02 / c01) * y02, y21, y11, (c * c0 / c02) * y01};
  return f;
}

GcFamily make_family4() {
  GcFamily f;
  f.n = 4;
  f.coords = {"x44", "x33", "x43", "x22", "x32", "x42", "x11", "x21", "x31", "x41"};
  f.v2_coords = {"y04", "y13", "y03", "y22", "y12", "y02", "y31", "y21", "y11", "y01"};
  f.word = {4, 3, 4, 2, 3, 4, 1, 2, 3, 4};

  const RatExpr x44 = V("x44"), x33 = V("x33"), x43 = V("x43"), x22 = V("x22"),
                x32 = V("x32"), x42 = V("x42"), x11 = V("x11"), x21 = V("x21"),
                x31 = V("x31"), x41 = V("x41"), c = V("c");

  const RatExpr d2 = (c * x21 * x22 + x32 * x11) / (x21 * x22 + x32 * x11);

  const RatExpr c3t1 = x44 * x33 * x32.pow(2) * x31;
  const RatExpr c3t2 = x44 * x43 * x22 * x32 * x31;
  const RatExpr c3t3 = x44 * x43 * x42 * x22 * x21;
  const RatExpr c3 = c3t1 + c3t2 + c3t3;
  const RatExpr c31 = c * c3t1 + c3t2 + c3t3;
  const RatExpr c32 = c * c3t1 + c * c3t2 + c3t3;

  const RatExpr c4t1 = x41 * x42.pow(2) * x43.pow(2) * x44;
  const RatExpr c4t2 = x33.pow(2) * x43 * x42.pow(2) * x41;
  const RatExpr c4t3 = x33.pow(2) * x32.pow(2) * x42 * x41;
  const RatExpr c4t4 = x33.pow(2) * x32.pow(2) * x31.pow(2);
  const RatExpr c4 = c4t1 + c4t2 + c4t3 + c4t4;
  const RatExpr c41 = c * c4t1 + c4t2 + c4t3 + c4t4;
  const RatExpr c42 = c * c4t1 + c * c4t2 + c4t3 + c4t4;
  const RatExpr c43 = c * c4t1 + c * c4t2 + c * c4t3 + c4t4;

  // the four terms of eps_0
  const RatExpr s1 = x11 * x42 / x22 + x21 * x42 / x32 + x31;
  const RatExpr s2 = x21 + x11 * x43 / x33 + x11 * x32 / x22;
  const RatExpr e0t1 = x41;
  const RatExpr e0t2 = s1.pow(2) / x42;
  const RatExpr e0t3 = s2.pow(2) / x43;
  const RatExpr e0t4 = x11.pow(2) / x44;
  const RatExpr c4p = e0t1 + e0t2 + e0t3 + e0t4;
  const RatExpr c41p = c * e0t1 + e0t2 + e0t3 + e0t4;
  const RatExpr c42p = c * e0t1 + c * e0t2 + e0t3 + e0t4;
  const RatExpr c43p = c * e0t1 + c * e0t2 + c * e0t3 + e0t4;

  const RatExpr A = x11 * x22 * x43 * c42p + c43p * x21 * x22 * x33 + c43p * x11 * x32 * x33;
  const RatExpr B = x11 * x22 * x43 + x21 * x22 * x33 + x11 * x32 * x33;
  const RatExpr C = c41p * x11 * x32 * x42 + c41p * x21 * x22 * x42 + c42p * x22 * x31 * x32;
  const RatExpr D = x11 * x32 * x42 + x21 * x22 * x42 + x22 * x31 * x32;
  const RatExpr G =
      c41p * (x11.pow(2) * x22 * x32 * x42 * x43 + x11.pow(2) * x32.pow(2) * x33 * x42 +
              x11 * x21 * x22 * x32 * x33 * x42) +
      c42p * (x11 * x21 * x22.pow(2) * x42 * x43 + x11 * x22.pow(2) * x31 * x32 * x43 +
              x11 * x22 * x31 * x32.pow(2) * x33) +
      c43p * (x11 * x21 * x22 * x32 * x33 * x42 + x21.pow(2) * x22.pow(2) * x33 * x42 +
              x21 * x22.pow(2) * x31 * x32 * x33);

  f.e_action.resize(5);
  f.e_action[0] = {x44 * c43p / (c * c4p),
                   x33 * A / (c * c4p * B),
                   x43 * c42p / c43p,
                   x22 * G / (B * D * c * c4p),
                   x32 * C * B / (A * D),
                   c41p * x42 / c42p,
                   x11 / c,
                   x21 * c4p * D * B / G,
                   x31 * c4p * D / C,
                   x41 * c4p / c41p};
  f.e_action[1] = {x44, x33, x43, x22, x32, x42, c * x11, x21, x31, x41};
  f.e_action[2] = {x44, x33, x43, d2 * x22, x32, x42, x11, (c / d2) * x21, x31, x41};
  f.e_action[3] = {x44, (c31 / c3) * x33, x43, x22, (c32 / c31) * x32,
                   x42, x11, x21, (c * c3 / c32) * x31, x41};
  f.e_action[4] = {(c41 / c4) * x44, x33, (c42 / c41) * x43, x22, x32,
                   (c43 / c42) * x42, x11, x21, x31, (c * c4 / c43) * x41};

  f.eps.resize(5);
  f.eps[0] = c4p;
  f.eps[1] = x22 / x11;
  f.eps[2] = x33 / x22 + x33 * x32 * x11 / (x22.pow(2) * x21);
  f.eps[3] = x44 / x33 + x44 * x43 * x22 / (x33.pow(2) * x32) +
             x44 * x43 * x42 * x22 * x21 / (x33.pow(2) * x32.pow(2) * x31);
  f.eps[4] = K(1) / x44 + x33.pow(2) / (x43 * x44.pow(2)) +
             x33.pow(2) * x32.pow(2) / (x44.pow(2) * x43.pow(2) * x42) +
             x33.pow(2) * x32.pow(2) * x31.pow(2) / (x44.pow(2) * x43.pow(2) * x42.pow(2) * x41);

  f.gamma.resize(5);
  f.gamma[0] = K(1) / x11.pow(2);
  f.gamma[1] = x11.pow(2) / (x21 * x22);
  f.gamma[2] = x21.pow(2) * x22.pow(2) / (x11 * x31 * x32 * x33);
  f.gamma[3] = x31.pow(2) * x32.pow(2) * x33.pow(2) / (x21 * x22 * x41 * x42 * x43 * x44);
  f.gamma[4] = x41.pow(2) * x42.pow(2) * x43.pow(2) * x44.pow(2) /
               (x31.pow(2) * x32.pow(2) * x33.pow(2));

  // forward chart change; the printed solutions only give x(y), so y(x) is
  // the exact inverse of that system (round-trip checked in the tests)
  const RatExpr den4 = x41 * x42 * x43 * x44;
  const RatExpr Qh = x21 * x22 * x42 * x43 + x22 * x31 * x32 * x43 + x31 * x32.pow(2) * x33;
  f.sigma_bar = {K(1) / x41,
                 D / (x22 * x32 * x41 * x42),
                 K(1) / x42,
                 Qh / (x32 * x33 * x41 * x42 * x43),
                 x32 * B / (x33 * x43 * D),
                 K(1) / x43,
                 x31 * x32 * x33 / den4,
                 x21 * x22 * x32 * x33 / (x44 * Qh),
                 x11 * x22 * x33 / (x44 * B),
                 K(1) / x44};

  const RatExpr y04 = V("y04"), y13 = V("y13"), y03 = V("y03"), y22 = V("y22"),
                y12 = V("y12"), y02 = V("y02"), y31 = V("y31"), y21 = V("y21"),
                y11 = V("y11"), y01 = V("y01");
  const RatExpr P = y31 * y02 * y12 + y21 * y22 * y02 + y11 * y12 * y22;
  const RatExpr Q = y31 * y03 * y22 + y31 * y12 * y13 + y21 * y22 * y13;
  const RatExpr R = y21 * y22 * y02 * y03 + y11 * y12 * y22 * y03 + y11 * y12.pow(2) * y13;
  f.sigma_bar_inv = {K(1) / y01,
                     P / (y12 * y22 * y01 * y02),
                     K(1) / y02,
                     R / (y12 * y13 * y01 * y02 * y03),
                     Q * y12 / (y03 * y13 * P),
                     K(1) / y03,
                     y11 * y12 * y13 / (y01 * y02 * y03 * y04),
                     y21 * y22 * y12 * y13 / (y04 * R),
                     y31 * y22 * y13 / (y04 * Q),
                     K(1) / y04};

  const RatExpr g1 = K(1) / y04;
  const RatExpr g2 = y13.pow(2) / (y04.pow(2) * y03);
  const RatExpr g3 = y13.pow(2) * y12.pow(2) / (y04.pow(2) * y03.pow(2) * y02);
  const RatExpr g4 =
      y13.pow(2) * y12.pow(2) * y11.pow(2) / (y04.pow(2) * y03.pow(2) * y02.pow(2) * y01);
  const RatExpr c0 = g1 + g2 + g3 + g4;
  const RatExpr c01 = c * g1 + g2 + g3 + g4;
  const RatExpr c02 = c * g1 + c * g2 + g3 + g4;
  const RatExpr c03 = c * g1 + c * g2 + c * g3 + g4;
  f.e0_bar = {(c01 / c0) * y04, y13, (c02 / c01) * y03, y22, y12,
              (c03 / c02) * y02, y31, y21, y11, (c * c0 / c03) * y01};
  return f;
}

}  // namespace

const GcFamily& family(int n) {
  static const GcFamily f2 = make_family2();
  static const GcFamily f3 = make_family3();
  static const GcFamily f4 = make_family4();
  switch (n) {
    case 2:
      return f2;
    case 3:
      return f3;
    case 4:
      return f4;
    default:
      throw std::invalid_argument("family: n must be 2, 3 or 4");
  }
}

}  // namespace crys
