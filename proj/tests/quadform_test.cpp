#include "wtenum/quadform.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"

namespace wtenum {
namespace {

using testing::expected_r_rows;
using testing::expected_s_rows;

QuadForm even_form(const std::shared_ptr<const FieldCtx>& F, std::uint32_t lambda1) {
  return QuadForm(F, std::nullopt, {Elem{lambda1}});
}

// First form of the given rank in canonical order.
QuadForm form_of_rank(const std::shared_ptr<const FieldCtx>& F, int r) {
  for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) {
    QuadForm f = QuadForm::from_index(F, i);
    if (f.rank() == r) return f;
  }
  throw std::logic_error("no form of that rank");
}

TEST(QuadForm, ShapeIsValidated) {
  const auto even = make_field(2, 1, 4);
  EXPECT_THROW(QuadForm(even, even->zero(), {even->zero()}), DomainError);
  EXPECT_THROW(QuadForm(even, std::nullopt, {}), DomainError);
  const auto odd = make_field(2, 1, 6);
  EXPECT_THROW(QuadForm(odd, std::nullopt, {odd->zero()}), DomainError);
  EXPECT_THROW(QuadForm(odd, odd->primitive(), {odd->zero()}), DomainError);
  EXPECT_THROW(QuadForm::from_index(even, 16), DomainError);
}

TEST(EvalForm, Examples) {
  const auto F = make_field(2, 1, 4);
  const QuadForm zero = even_form(F, 0);
  const QuadForm one = even_form(F, 1);
  for (std::uint32_t x = 0; x < 16; ++x) EXPECT_EQ(eval_form(zero, Elem{x}), F->zero());
  for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) {
    EXPECT_EQ(eval_form(QuadForm::from_index(F, i), F->zero()), F->zero());
  }
  EXPECT_EQ(eval_form(one, F->primitive()), F->one());
  EXPECT_EQ(eval_form(one, F->primitive()), F->trace(F->pow(F->primitive(), 3), TraceLevel::kQsToQ));
}

TEST(EvalForm, OddMUsesRelativeTrace) {
  const auto F = make_field(3, 1, 6);
  const auto dom = QuadForm::delta0_domain(*F);
  ASSERT_EQ(dom.size(), 27u);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Elem d0 = dom[rng() % dom.size()];
    const Elem l1{static_cast<std::uint32_t>(rng() % F->order())};
    const QuadForm f(F, d0, {l1});
    const Elem x{static_cast<std::uint32_t>(rng() % F->order())};
    const Elem expected =
        F->add(F->trace(F->mul(d0, F->pow(x, 28)), TraceLevel::kQmToQ), F->trace(F->mul(l1, F->pow(x, 4)), TraceLevel::kQsToQ));
    EXPECT_EQ(eval_form(f, x), expected);
  }
}

TEST(Rank, ZeroForm) { EXPECT_EQ(rank(even_form(make_field(3, 1, 4), 0)), 0); }

TEST(Rank, GramMatchesRadicalEnumeration) {
  for (const auto& F : {make_field(2, 1, 4), make_field(3, 1, 4), make_field(2, 1, 6)}) {
    for (std::uint64_t i = 0; i < QuadForm::space_size(*F); i += 3) {
      const QuadForm f = QuadForm::from_index(F, i);
      ASSERT_EQ(f.rank(), testing::naive_rank(f)) << i;
    }
  }
}

std::map<int, int> rank_counts(const std::shared_ptr<const FieldCtx>& F) {
  std::map<int, int> counts;
  for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) ++counts[QuadForm::from_index(F, i).rank()];
  return counts;
}

TEST(Rank, CountsOverTheFormSpace) {
  EXPECT_EQ(rank_counts(make_field(2, 1, 4)), (std::map<int, int>{{0, 1}, {2, 5}, {4, 10}}));
  EXPECT_EQ(rank_counts(make_field(3, 1, 4)), (std::map<int, int>{{0, 1}, {2, 20}, {4, 60}}));
  EXPECT_EQ(rank_counts(make_field(2, 1, 6)), (std::map<int, int>{{0, 1}, {2, 21}, {4, 210}, {6, 280}}));
}

TEST(BigT, Examples) {
  const auto F22 = make_field(2, 1, 4);
  EXPECT_EQ(big_T(even_form(F22, 0)), 16);
  EXPECT_EQ(big_T(form_of_rank(F22, 2)), -8);
  EXPECT_EQ(big_T(form_of_rank(F22, 4)), 4);
  const auto F32 = make_field(3, 1, 4);
  EXPECT_EQ(big_T(form_of_rank(F32, 4)), 9);
  EXPECT_EQ(big_T(form_of_rank(F32, 2)), -27);
}

TEST(BigT, BudgetIsEnforced) {
  EXPECT_THROW(big_T(even_form(make_field(3, 1, 4), 1), 80), BudgetExceeded);
  EXPECT_THROW(s_histogram(even_form(make_field(2, 1, 4), 1), 255), BudgetExceeded);
}

TEST(Epsilon, Examples) {
  const auto F = make_field(2, 1, 4);
  EXPECT_EQ(epsilon(even_form(F, 0)), 1);
  EXPECT_EQ(epsilon(form_of_rank(F, 2)), -1);
  EXPECT_EQ(epsilon(form_of_rank(F, 4)), 1);
}

TEST(ContractRootsOfUnity, RationalOnlyWhenBalanced) {
  const std::vector<std::uint64_t> ok{5, 2, 2};
  EXPECT_EQ(contract_roots_of_unity(ok), 3);
  const std::vector<std::uint64_t> bad{5, 1, 2};
  EXPECT_THROW(contract_roots_of_unity(bad), ConsistencyError);
  const std::vector<std::uint64_t> binary{3, 13};
  EXPECT_EQ(contract_roots_of_unity(binary), -10);
}

TEST(CountSolutions, ZeroForm) {
  const auto F = make_field(3, 1, 4);
  const QuadForm zero = even_form(F, 0);
  EXPECT_EQ(count_solutions(zero, F->zero(), F->zero()), 81u);
  for (std::uint32_t beta = 1; beta < 81; beta += 7) {
    for (std::uint32_t z = 0; z < 3; ++z) EXPECT_EQ(count_solutions(zero, Elem{beta}, F->constant(z)), 27u);
  }
}

TEST(CountSolutions, MatchesDirectCount) {
  const auto F = make_field(2, 2, 4);
  const QuadForm f = QuadForm::from_index(F, 77);
  const Elem beta{91};
  for (std::uint32_t z = 0; z < 4; ++z) {
    const Elem zeta = F->fq().to_big(z);
    std::uint64_t direct = 0;
    for (std::uint32_t x = 0; x < 256; ++x) {
      if (F->add(eval_form(f, Elem{x}), F->trace(F->mul(beta, Elem{x}), TraceLevel::kQsToQ)) == zeta) ++direct;
    }
    EXPECT_EQ(count_solutions(f, beta, zeta), direct);
  }
}

// For fixed zeta, N(beta, zeta) over beta follows three rows given (r, eps);
// nu(0) = q - 1 and nu(c) = -1 otherwise.
void expect_solution_pattern(const QuadForm& f) {
  const FieldCtx& F = f.field();
  const std::int64_t q = static_cast<std::int64_t>(F.q());
  const int s = F.s();
  const int r = f.rank();
  const int eps = f.epsilon();
  const std::int64_t qs1 = static_cast<std::int64_t>(ipow(F.q(), s - 1));
  const std::int64_t qr = static_cast<std::int64_t>(ipow(F.q(), r));
  const std::int64_t qh = static_cast<std::int64_t>(ipow(F.q(), r / 2));
  const std::int64_t big = static_cast<std::int64_t>(ipow(F.q(), s - r / 2)) / q;
  std::vector<std::map<std::int64_t, std::int64_t>> seen(F.q());
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    const auto counts = value_counts(f, Elem{static_cast<std::uint32_t>(c)});
    for (std::uint32_t z = 0; z < F.q(); ++z) ++seen[z][static_cast<std::int64_t>(counts[z])];
    std::uint64_t total = 0;
    for (auto v : counts) total += v;
    ASSERT_EQ(total, F.order());
  }
  for (std::uint32_t z = 0; z < F.q(); ++z) {
    const std::int64_t nu = z == 0 ? q - 1 : -1;
    std::map<std::int64_t, std::int64_t> expected;
    const auto put = [&expected](std::int64_t value, std::int64_t count) {
      if (count) expected[value] += count;
    };
    put(qs1, static_cast<std::int64_t>(F.order()) - qr);
    put(qs1 + eps * (q - 1) * big, (qr + eps * nu * qh) / q);
    put(qs1 - eps * big, ((q - 1) * qr - eps * nu * qh) / q);
    ASSERT_EQ(seen[z], expected) << "rank " << r << " zeta label " << z;
  }
}

TEST(CountSolutions, PatternForEveryFormAt22) {
  const auto F = make_field(2, 1, 4);
  for (std::uint64_t i = 0; i < 16; ++i) expect_solution_pattern(QuadForm::from_index(F, i));
}

TEST(CountSolutions, PatternOnSampledForms) {
  for (const auto& F : {make_field(3, 1, 4), make_field(2, 1, 6), make_field(2, 2, 4)}) {
    for (std::uint64_t i = 0; i < QuadForm::space_size(*F); i += 7) expect_solution_pattern(QuadForm::from_index(F, i));
  }
}

TEST(SHistogram, Examples) {
  const auto F = make_field(2, 1, 4);
  EXPECT_EQ(s_histogram(even_form(F, 0)), (SumHistogram{{0, 15}, {16, 1}}));
  EXPECT_EQ(s_histogram(form_of_rank(F, 2)), (SumHistogram{{0, 12}, {-8, 1}, {8, 3}}));
  EXPECT_EQ(s_histogram(form_of_rank(F, 4)), (SumHistogram{{4, 10}, {-4, 6}}));
}

TEST(RHistogram, Examples) {
  const auto F = make_field(2, 1, 4);
  EXPECT_EQ(r_histogram(even_form(F, 0), F->one()), (SumHistogram{{-16, 1}, {0, 15}}));
  EXPECT_EQ(r_histogram(form_of_rank(F, 2), F->one()), (SumHistogram{{0, 12}, {-8, 3}, {8, 1}}));
  const auto G = make_field(3, 1, 4);
  EXPECT_EQ(r_histogram(form_of_rank(G, 2), G->one()), (SumHistogram{{0, 72}, {-54, 4}, {27, 5}}));
  EXPECT_EQ(r_histogram(even_form(G, 0), G->constant(2)), (SumHistogram{{-81, 1}, {0, 80}}));
  EXPECT_THROW(r_histogram(form_of_rank(G, 2), G->zero()), DomainError);
}

// Every form: even rank, eps = (-1)^(r/2), |T| = q^(s - r/2), and both
// histograms equal to the three-row pattern.
void expect_three_rows(const QuadForm& f) {
  const FieldCtx& F = f.field();
  const int r = f.rank();
  ASSERT_EQ(r % 2, 0);
  const int eps = f.epsilon();
  ASSERT_EQ(eps, (r / 2) % 2 == 0 ? 1 : -1);
  const std::int64_t t = big_T(f);
  ASSERT_EQ(t, eps * static_cast<std::int64_t>(ipow(F.q(), F.s() - r / 2)));
  ASSERT_EQ(s_histogram(f), expected_s_rows(F.q(), F.s(), r, eps));
  for (std::uint32_t b = 1; b < F.q(); ++b) {
    ASSERT_EQ(r_histogram(f, F.fq().to_big(b)), expected_r_rows(F.q(), F.s(), r, eps)) << "b label " << b;
  }
}

TEST(ThreeRowPattern, EveryFormAt22And32) {
  for (const auto& F : {make_field(2, 1, 4), make_field(3, 1, 4)}) {
    for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) expect_three_rows(QuadForm::from_index(F, i));
  }
}

TEST(ThreeRowPattern, SampledFormsAt23And42) {
  for (const auto& F : {make_field(2, 1, 6), make_field(2, 2, 4)}) {
    for (std::uint64_t i = 0; i < QuadForm::space_size(*F); i += 5) expect_three_rows(QuadForm::from_index(F, i));
  }
}

TEST(ThreeRowPattern, MOneForms) {
  for (const auto& F : {make_field(2, 1, 2), make_field(3, 1, 2), make_field(5, 1, 2), make_field(2, 2, 2)}) {
    for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) expect_three_rows(QuadForm::from_index(F, i));
  }
}

TEST(QuadForm, MemoizedValuesAreStableAcrossThreads) {
  const auto F = make_field(3, 1, 4);
  const QuadForm f = QuadForm::from_index(F, 40);
  std::vector<std::thread> threads;
  std::vector<int> ranks(4), eps(4);
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] {
      ranks[static_cast<std::size_t>(i)] = f.rank();
      eps[static_cast<std::size_t>(i)] = f.epsilon();
    });
  }
  for (auto& t : threads) t.join();
  for (int i = 1; i < 4; ++i) {
    EXPECT_EQ(ranks[static_cast<std::size_t>(i)], ranks[0]);
    EXPECT_EQ(eps[static_cast<std::size_t>(i)], eps[0]);
  }
}

}  // namespace
}  // namespace wtenum
