#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "fibmod/module.hpp"
#include "fibmod/recurrence.hpp"
#include "oracle.hpp"

using namespace fibmod;

namespace {

Ring Z() { return RingDescriptor::integer(); }
Ring Q() { return RingDescriptor::rational(); }

mpz_class val(const ModuleElement& x) { return x.scalar().integer_value(); }

ModuleElement vec(const Ring& r, std::initializer_list<long> xs) {
  std::vector<Element> cs;
  for (long x : xs) cs.push_back(Element::from_integer(r, x));
  return ModuleElement(std::move(cs));
}

}  // namespace

TEST(Module, KroneckerAndConcat) {
  const auto a = vec(Z(), {1, 2}), b = vec(Z(), {3, 4, 5});
  EXPECT_EQ(kron(a, b), vec(Z(), {3, 4, 5, 6, 8, 10}));
  EXPECT_EQ(concat(a, b), vec(Z(), {1, 2, 3, 4, 5}));
  EXPECT_EQ(concat(a, b).project(2, 3), b);
  EXPECT_EQ(a.to_string(), "[1, 2]");
  EXPECT_EQ(ModuleElement(Element::from_integer(Z(), 7)).to_string(), "7");
}

TEST(Module, RankMismatchThrows) {
  EXPECT_THROW((void)(vec(Z(), {1}) + vec(Z(), {1, 2})), Error);
  std::vector<ModuleElement> mixed{vec(Z(), {1}), vec(Z(), {1, 2})};
  EXPECT_THROW(uniform_rank(mixed), Error);
}

TEST(Recurrence, FibonacciTerms) {
  const auto fib = Sequence1D::of(RecurrenceType::of(Z(), {1, 1}), {0, 1});
  EXPECT_EQ(val(fib.term(8)), 21);
  EXPECT_EQ(val(fib.term(0)), 0);
  EXPECT_EQ(val(fib.term_fast(8)), 21);
  EXPECT_EQ(fib.term_fast(1), fib.initial()[1]);
}

TEST(Recurrence, MersenneLikeSequence) {
  const auto s = Sequence1D::of(RecurrenceType::of(Z(), {3, -2}), {0, 1});
  EXPECT_EQ(val(s.term(5)), 31);
  const auto psi = reconstruct(RecurrenceType::of(Z(), {3, -2}), {vec(Z(), {0}), vec(Z(), {1})});
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(val(psi.term(n)), (mpz_class(1) << n) - 1);
}

TEST(Recurrence, BasisValues) {
  const auto fib = RecurrenceType::of(Z(), {1, 1});
  EXPECT_EQ(basis_value(fib, 1, 6).integer_value(), 8);
  EXPECT_EQ(basis_value(fib, 0, 3).integer_value(), 1);
  EXPECT_THROW(basis_value(fib, 2, 3), Error);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 4;
    std::vector<long> a;
    for (std::size_t j = 0; j < d; ++j) a.push_back(oracle::uniform(rng, -3, 3));
    std::vector<Element> cs;
    for (long x : a) cs.push_back(Element::from_integer(Z(), x));
    const RecurrenceType rec(cs);
    const std::uint64_t n = oracle::uniform(rng, 0, 60);
    const auto fast = basis_values(rec, n);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<oracle::Big> init(d, 0);
      init[i] = 1;
      EXPECT_EQ(fast[i].integer_value(), oracle::iterate(a, init, n + 1).back());
      EXPECT_EQ(basis_value(rec, i, n), fast[i]);
    }
  }
}

TEST(Recurrence, DecomposeAndShift) {
  const auto fib = Sequence1D::of(RecurrenceType::of(Z(), {1, 1}), {0, 1});
  const auto coords = decompose(fib);
  EXPECT_EQ(val(coords[0]), 0);
  EXPECT_EQ(val(coords[1]), 1);
  const auto tri = Sequence1D::of(RecurrenceType::of(Z(), {1, 1, 1}), {1, 2, 3});
  EXPECT_EQ(decompose(tri), tri.initial());
  const auto shifted = decompose(shift(fib, 1));
  EXPECT_EQ(val(shifted[0]), 1);
  EXPECT_EQ(val(shifted[1]), 1);
  EXPECT_EQ(val(shift(fib, 1).term(0)), 1);
  EXPECT_EQ(val(shift(fib, 2).term(6)), 21);
  const auto zero = reconstruct(RecurrenceType::of(Z(), {1, 1}), {vec(Z(), {0}), vec(Z(), {0})});
  for (unsigned n = 0; n < 20; ++n) EXPECT_TRUE(zero.term(n).is_zero());
  EXPECT_EQ(val(reconstruct(RecurrenceType::of(Z(), {1, 1}), coords).term(8)), 21);
}

TEST(Recurrence, ReconstructDecomposeRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + trial % 3;
    std::vector<Element> cs;
    std::vector<ModuleElement> init;
    for (std::size_t j = 0; j < d; ++j) {
      cs.push_back(Element::from_integer(Z(), oracle::uniform(rng, -3, 3)));
      init.push_back(vec(Z(), {oracle::uniform(rng, -9, 9), oracle::uniform(rng, -9, 9)}));
    }
    const Sequence1D x(RecurrenceType(cs), init);
    const auto y = reconstruct(x.recurrence(), decompose(x));
    for (unsigned n = 0; n <= 30; ++n) EXPECT_EQ(y.term(n), x.term(n));
  }
}

TEST(Recurrence, BackwardExtension) {
  const auto fib = Sequence1D::of(RecurrenceType::of(Z(), {1, 1}), {0, 1});
  const auto back = extend_backward(fib, 4);  // F_{-1..-4} = 1, -1, 2, -3
  ASSERT_EQ(back.size(), 4U);
  EXPECT_EQ(val(back[0]), 1);
  EXPECT_EQ(val(back[1]), -1);
  EXPECT_EQ(val(back[2]), 2);
  EXPECT_EQ(val(back[3]), -3);

  const auto s = Sequence1D::of(RecurrenceType::of(Z(), {3, -2}), {0, 1});
  try {
    extend_backward(s, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvertibleCoefficient);
  }
  const auto sq = Sequence1D::of(RecurrenceType::of(Q(), {3, -2}), {0, 1});
  const auto expected = oracle::backward2(3, -2, 0, 1, 6);
  const auto got = extend_backward(sq, 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(got[i].scalar().rational_value(), expected[i]);
}

TEST(Recurrence, Membership) {
  const auto fib = RecurrenceType::of(Z(), {1, 1});
  auto seq = [](std::initializer_list<long> xs) {
    std::vector<ModuleElement> out;
    for (long x : xs) out.emplace_back(Element::from_integer(RingDescriptor::integer(), x));
    return out;
  };
  EXPECT_TRUE(check_membership(seq({0, 1, 1, 2, 3, 5}), fib));
  EXPECT_FALSE(check_membership(seq({1, 1, 3}), fib));
  EXPECT_TRUE(check_membership(seq({1, 0, 1, 1}), fib));
  EXPECT_THROW(check_membership(seq({1, 1}), fib), Error);
}

TEST(Recurrence, SumOfSequences) {
  const auto rec = RecurrenceType::of(Z(), {1, 1});
  const auto x = Sequence1D::of(rec, {0, 1}), y = Sequence1D::of(rec, {2, -1});
  const auto s = x + y;
  for (unsigned n = 0; n < 20; ++n) EXPECT_EQ(s.term(n), x.term(n) + y.term(n));
  EXPECT_THROW(x + Sequence1D::of(RecurrenceType::of(Z(), {1, 2}), {0, 1}), Error);
}

TEST(Recurrence, ConcurrentReadsMatchSequential) {
  const auto rec = RecurrenceType::of(Z(), {2, 1, -1});
  const auto x = Sequence1D::of(rec, {1, -2, 3});
  const auto ref = Sequence1D::of(rec, {1, -2, 3}).prefix(400);
  std::vector<std::thread> pool;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (int n = 399 - t; n >= 0; n -= 3)
        if (!(x.term(n) == ref[n])) ++mismatches[t];
    });
  }
  for (auto& th : pool) th.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}

TEST(Recurrence, CompanionMatrixPowers) {
  const auto rec = RecurrenceType::of(Z(), {1, 1});
  const auto c = companion_matrix(rec);
  EXPECT_EQ(c.pow(0), SquareMatrix::identity(Z(), 2));
  EXPECT_EQ(c.pow(5), c * c * c * c * c);
  EXPECT_EQ(c.pow(10)(0, 1).integer_value(), 55);  // [[F11, F10], [F10, F9]]
}
