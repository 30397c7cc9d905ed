#include <gtest/gtest.h>

#include "hpw/painleve.hpp"
#include "support.hpp"

using namespace hpw;
using testing_support::to_set;

namespace {

RatFunc rf(std::initializer_list<long> num, std::initializer_list<long> den) { return RatFunc(IntPoly(num), IntPoly(den)); }

}  // namespace

TEST(Families, DiagramsAndDegeneracies) {
  EXPECT_EQ(gh_maya(2, 5).t(), std::vector<int>({6, 5, 4, 3, 2}));
  EXPECT_EQ(o_maya(2, 5).t(), std::vector<int>({14, 11, 8, 5, 4, 2, 1}));
  EXPECT_EQ(gh_maya(3, 0), MayaDiagram());
  EXPECT_EQ(o_maya(0, 0), MayaDiagram());
  EXPECT_EQ(gh_maya(0, 4), MayaDiagram().shifted(4));
  EXPECT_THROW(gh_maya(-1, 2), precondition_error);
}

TEST(ThreeCycle, ClosesUpToTranslation) {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      for (PivClass c : {PivClass::GH, PivClass::O}) {
        const MayaChain ch = three_cycle(c, a, b);
        ASSERT_EQ(ch.diagrams.size(), 4u);
        EXPECT_EQ(ch.diagrams[3], ch.diagrams[0].shifted(ch.k));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ch.diagrams[i + 1], ch.diagrams[i].flipped(ch.flips[i]));
      }
    }
}

TEST(ThreeCycle, NeighboursOfWorkedExamples) {
  const auto gh = three_cycle_neighbours(three_cycle(PivClass::GH, 2, 4));
  EXPECT_EQ(gh, std::vector<MayaDiagram>({gh_maya(2, 5), gh_maya(1, 4).shifted(1), gh_maya(3, 3)}));
  const auto o = three_cycle_neighbours(three_cycle(PivClass::O, 1, 2));
  EXPECT_EQ(o, std::vector<MayaDiagram>({o_maya(0, 1).shifted(3), o_maya(2, 2), o_maya(1, 3)}));
}

TEST(ThreeCycle, PotentialsShiftByTwoK) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (PivClass c : {PivClass::GH, PivClass::O}) {
        const MayaChain ch = three_cycle(c, a, b);
        const RatFunc U1 = potential(ch.diagrams[0]).full();
        const RatFunc U4 = potential(ch.diagrams[3]).full();
        EXPECT_EQ(U4, U1 + RatFunc::constant(2 * ch.k));
      }
}

TEST(ThreeCycle, DarbouxStepsSumToLinear) {
  // U_{i+1} = U_i - 2 f_i', so f_1 + f_2 + f_3 = -k t.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (PivClass c : {PivClass::GH, PivClass::O}) {
        const MayaChain ch = three_cycle(c, a, b);
        RatFunc sum;
        for (std::size_t i = 0; i < 3; ++i) {
          const ChainStep st = chain_step_verify(ch.diagrams[i], ch.flips[i]);
          ASSERT_TRUE(st.ok) << to_string(c) << "(" << a << "," << b << ") step " << i;
          sum = sum + st.f;
        }
        EXPECT_EQ(sum, RatFunc(IntPoly{0, -ch.k}));
      }
}

TEST(MinimalOrder, GeneralizedHermiteExample) {
  const MinOrderSpec s = min_order_gh(2, 4);
  EXPECT_EQ(s.order, 2);
  EXPECT_EQ(s.origin, 6);
  EXPECT_EQ(pseudo_wronskian(s.minimal), oracle::leibniz_det({oracle::conj_row(5, 2), oracle::conj_row(4, 2)}));
  EXPECT_EQ(pseudo_wronskian(s.minimal), IntPoly({45, 0, 0, 0, 120, 0, 64, 0, 16}) * BigInt(-32));
  EXPECT_EQ(pseudo_wronskian(gh_maya(2, 5).shifted(-7)), IntPoly({-225, 0, 450, 0, 600, 0, 720, 0, 240, 0, 32}) * BigInt(-64));
  // GH(1,4) - 5 has the single hole -5, so its pseudo-Wronskian is h4.
  EXPECT_EQ(pseudo_wronskian(gh_maya(1, 4).shifted(-5)), IntPoly({3, 0, 12, 0, 4}) * BigInt(4));
  EXPECT_EQ(pseudo_wronskian(gh_maya(3, 3).shifted(-6)), IntPoly({0, -135, 0, 0, 0, 72, 0, 0, 0, 16}) * BigInt(-512));
  // Wr[H3..H7] = 18432 Wr[h5, h6, h7]
  EXPECT_EQ(oracle::hermite_wronskian({3, 4, 5, 6, 7}), oracle::conj_wronskian({5, 6, 7}) * BigInt(18432));
  EXPECT_EQ(min_order_gh(3, 5).order, 3);
  EXPECT_THROW(min_order_gh(0, 3), precondition_error);
}

TEST(MinimalOrder, OkamotoExample) {
  EXPECT_EQ(pseudo_wronskian(o_maya(1, 2).shifted(-3)), IntPoly({0, -5, 0, 0, 0, 4}) * BigInt(-8));
  EXPECT_EQ(pseudo_wronskian(o_maya(0, 1)), IntPoly({-1, 0, 2}) * BigInt(2));
  const MinOrderSpec s22 = min_order_o(2, 2);
  EXPECT_EQ(s22.order, 2);
  EXPECT_EQ(pseudo_wronskian(s22.minimal), oracle::leibniz_det({oracle::conj_row(5, 2), oracle::conj_row(2, 2)}));
  EXPECT_EQ(pseudo_wronskian(s22.minimal), IntPoly({5, 0, 10, 0, 20, 0, 8}) * BigInt(-48));
  const MinOrderSpec s13 = min_order_o(1, 3);
  EXPECT_EQ(s13.order, 3);
  EXPECT_EQ(pseudo_wronskian(s13.minimal),
            oracle::leibniz_det({oracle::conj_row(2, 3), oracle::hermite_row(2, 3), oracle::hermite_row(5, 3)}));
  EXPECT_EQ(pseudo_wronskian(s13.minimal), IntPoly({-25, 0, -150, 0, 200, 0, -80, 0, -80, 0, 32}) * BigInt(192));
  const MinOrderSpec s35 = min_order_o(3, 5);
  EXPECT_EQ(s35.order, 5);
  EXPECT_EQ(s35.minimal, MayaDiagram({8, 5, 2}, {5, 2}));
  EXPECT_EQ(to_string(durfee_symbol(s35.minimal)), "[6,4,2|4,2]_{3x2}");
  EXPECT_THROW(min_order_o(0, 2), precondition_error);
}

TEST(MinimalOrder, OrdersMatchBruteForce) {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      const MinOrderSpec g = min_order_gh(a, b);
      EXPECT_EQ(g.order, std::min(a, b));
      EXPECT_EQ(g.order, oracle::brute_min_girth(to_set(gh_maya(a, b))));
      const MinOrderSpec o = min_order_o(a, b);
      EXPECT_EQ(o.order, std::max(a, b));
      EXPECT_EQ(o.order, oracle::brute_min_girth(to_set(o_maya(a, b))));
    }
}

TEST(MinimalOrder, ConstantRelatesToFullWronskian) {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (const MinOrderSpec& s : {min_order_gh(a, b), min_order_o(a, b)}) {
        EXPECT_TRUE(proportional_with(pseudo_wronskian(s.full), s.constant, pseudo_wronskian(s.minimal)))
            << to_string(s.full) << " -> " << to_string(s.minimal);
      }
}

TEST(Piv, GeneralizedHermiteGoldenSolutions) {
  const RatFunc A = rf({0, 0, 0, 15 * 32, 0, 12 * 32, 0, 4 * 32}, {45, 0, 0, 0, 120, 0, 64, 0, 16});
  const RatFunc B = rf({0, 45 * 20, 0, 120 * 20, 0, 216 * 20, 0, 96 * 20, 0, 16 * 20}, {-225, 0, 450, 0, 600, 0, 720, 0, 240, 0, 32});
  const RatFunc C = rf({0, 3 * 8, 0, 2 * 8}, {3, 0, 12, 0, 4});
  const RatFunc D = rf({0, 0, 0, 9 * 32, 0, 0, 0, 4 * 32}, {-135, 0, 0, 0, 72, 0, 0, 0, 16});
  const RatFunc y1 = A - B;
  // A - C is the solution for (a, b) = (7, -32); -A - C solves no PIV.
  const RatFunc y2 = A - C;
  const RatFunc y3 = rf({-1}, {0, 1}) - D + A + RatFunc(IntPoly{0, -2});

  const PivSolution s1 = piv_solution_gh(2, 4, 1), s2 = piv_solution_gh(2, 4, 2), s3 = piv_solution_gh(2, 4, 3);
  EXPECT_EQ(s1.y, y1);
  EXPECT_EQ(s2.y, y2);
  EXPECT_EQ(s3.y, y3);
  EXPECT_EQ(std::make_pair(s1.a, s1.b), std::make_pair(BigRat(-11), BigRat(-8)));
  EXPECT_EQ(std::make_pair(s2.a, s2.b), std::make_pair(BigRat(7), BigRat(-32)));
  EXPECT_EQ(std::make_pair(s3.a, s3.b), std::make_pair(BigRat(1), BigRat(-72)));
  for (const auto& s : {s1, s2, s3}) EXPECT_TRUE(verify_piv(s).ok);
}

TEST(Piv, OkamotoGoldenSolutions) {
  const RatFunc common = rf({0, -2}, {3}) + rf({0, 0, 0, 16}, {-45, 0, 0, 0, 4}) + rf({1}, {0, 1});
  const RatFunc y1 = common - rf({0, 4}, {-3, 0, 2});
  const RatFunc y2 = common - rf({0, 15 * 12, 0, 20 * 12, 0, 4 * 12}, {135, 0, 90, 0, 60, 0, 8});
  const RatFunc y3 = common - rf({0, -1215 * 20, 0, 1080 * 20, 0, -216 * 20, 0, -96 * 20, 0, 16 * 20},
                                 {-6075, 0, -12150, 0, 5400, 0, -720, 0, -240, 0, 32});
  const PivSolution s1 = piv_solution_o(1, 2, 1), s2 = piv_solution_o(1, 2, 2), s3 = piv_solution_o(1, 2, 3);
  EXPECT_EQ(s1.y, y1);
  EXPECT_EQ(s2.y, y2);
  EXPECT_EQ(s3.y, y3);
  EXPECT_EQ(std::make_pair(s1.a, s1.b), std::make_pair(BigRat(3), make_rat(-32, 9)));
  EXPECT_EQ(std::make_pair(s2.a, s2.b), std::make_pair(BigRat(-1), make_rat(-128, 9)));
  EXPECT_EQ(std::make_pair(s3.a, s3.b), std::make_pair(BigRat(-5), make_rat(-32, 9)));
  for (const auto& s : {s1, s2, s3}) EXPECT_TRUE(verify_piv(s).ok);
}

TEST(Piv, PerturbedParameterLeavesResidual) {
  PivSolution s = piv_solution_gh(2, 4, 2);
  s.b += 1;
  const PivReport r = verify_piv(s);
  EXPECT_FALSE(r.ok);
  const IntPoly D2 = s.y.den() * s.y.den();
  EXPECT_EQ(r.residual, D2 * D2 * BigInt(-2));
  PivSolution o = piv_solution_o(1, 2, 1);
  o.a += 1;
  EXPECT_FALSE(verify_piv(o).ok);
}

TEST(Piv, CatalogVerifies) {
  const auto cat = piv_catalog(4);
  EXPECT_GT(cat.size(), 100u);
  for (const auto& s : cat) {
    EXPECT_TRUE(verify_piv(s).ok) << to_string(s.cls) << "(" << s.p1 << "," << s.p2 << ") b" << s.branch;
    EXPECT_FALSE(s.y.is_zero());
  }
}

TEST(Piv, ParameterClosedForms) {
  for (int m = 1; m <= 3; ++m)
    for (int l = 1; l <= 3; ++l) {
      EXPECT_EQ(piv_solution_gh(m, l, 1).a, BigRat(-(1 + m + 2 * l)));
      EXPECT_EQ(piv_solution_gh(m, l, 1).b, BigRat(-2 * m * m));
      EXPECT_EQ(piv_solution_gh(m, l, 2).a, BigRat(2 * m + l - 1));
      EXPECT_EQ(piv_solution_gh(m, l, 2).b, BigRat(-2 * l * l));
      EXPECT_EQ(piv_solution_gh(m, l, 3).a, BigRat(l - m - 1));
      EXPECT_EQ(piv_solution_gh(m, l, 3).b, BigRat(-2 * (m + l) * (m + l)));
      EXPECT_EQ(piv_solution_o(m, l, 1).a, BigRat(m + l));
      EXPECT_EQ(piv_solution_o(m, l, 1).b, make_rat(-2 * (1 - 3 * m + 3 * l) * (1 - 3 * m + 3 * l), 9));
      EXPECT_EQ(piv_solution_o(m, l, 2).a, BigRat(-1 - 2 * m + l));
      EXPECT_EQ(piv_solution_o(m, l, 2).b, make_rat(-2 * (2 + 3 * l) * (2 + 3 * l), 9));
      EXPECT_EQ(piv_solution_o(m, l, 3).a, BigRat(-2 - 2 * l + m));
      EXPECT_EQ(piv_solution_o(m, l, 3).b, make_rat(-2 * (1 + 3 * m) * (1 + 3 * m), 9));
    }
}

TEST(Piv, Preconditions) {
  EXPECT_THROW(piv_solution_gh(2, 4, 4), precondition_error);
  EXPECT_THROW(piv_solution_o(0, 2, 1), precondition_error);
  EXPECT_THROW(piv_solution_gh(-1, 2, 1), precondition_error);
  EXPECT_THROW(verify_piv(PivSolution{}), precondition_error);
}
