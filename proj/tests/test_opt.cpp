#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oneway/opt.hpp"
#include "oneway/rac.hpp"

using namespace oneway;

namespace {

TaskSpaces tiny_task(PrimeDim d, std::size_t nx, std::size_t ny, std::size_t nb) {
  std::vector<std::string> xs, ys, bs;
  for (std::size_t i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < ny; ++i) ys.push_back("y" + std::to_string(i));
  for (std::size_t i = 0; i < nb; ++i) bs.push_back("b" + std::to_string(i));
  return {d, xs, ys, bs};
}

PayoffTable random_payoff(const TaskSpaces& s, std::mt19937_64& rng) {
  PayoffTable pay;
  pay.weight.resize(s.nx() * s.ny() * s.nb());
  for (auto& w : pay.weight) w = static_cast<long long>(rng() % 7);
  pay.divisor = static_cast<long long>(s.nx() * s.ny());
  return pay;
}

Rat score_of(const TaskSpaces& s, const PayoffTable& pay, const ClassicalPureStrategy& c) {
  long long total = 0;
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y) {
      const int b = c.decode[y][static_cast<std::size_t>(c.encode[x])];
      total += pay.weight[(x * s.ny() + y) * s.nb() + static_cast<std::size_t>(b)];
    }
  return Rat(total, pay.divisor);
}

}  // namespace

TEST_CASE("kernel and reference agree on value and argmax") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const PrimeDim d(2);
    const TaskSpaces s = tiny_task(d, 3, 2, 2);
    const PayoffTable pay = random_payoff(s, rng);
    const OptReport fast = classical_optimum(s, pay);
    const OptReport slow = classical_optimum_serial(s, pay);
    CAPTURE(trial);
    REQUIRE(fast.best == slow.best);
    // Both break ties toward the first strategy in encoding-major order.
    REQUIRE(fast.argmax.encode == slow.argmax.encode);
    REQUIRE(fast.argmax.decode == slow.argmax.decode);
    CHECK(score_of(s, pay, fast.argmax) == fast.best);
    validate_classical(s, fast.argmax);
  }
}

TEST_CASE("decomposed search reaches the same optimum") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const PrimeDim d(trial % 2 == 0 ? 2 : 3);
    const TaskSpaces s = tiny_task(d, 4, 2, 2);
    const PayoffTable pay = random_payoff(s, rng);
    const OptReport joint = classical_optimum(s, pay);
    const OptReport split = classical_optimum_decomposed(s, pay);
    CAPTURE(trial);
    REQUIRE(joint.best == split.best);
    CHECK(score_of(s, pay, split.argmax) == split.best);
  }
}

TEST_CASE("search size counts the full candidate space") {
  const PrimeDim d(2);
  const TaskSpaces s = tiny_task(d, 3, 2, 2);
  PayoffTable pay;
  pay.weight.assign(s.nx() * s.ny() * s.nb(), 1);
  pay.divisor = 6;
  const OptReport rep = classical_optimum(s, pay);
  // 2^3 encodings times (2^2)^2 decodings.
  CHECK(rep.search_size == 8 * 16);
  CHECK(rep.best == Rat(1));  // constant payoff
}

TEST_CASE("budget violations raise instead of truncating") {
  const PrimeDim d(5);
  const TaskSpaces s = tiny_task(d, 12, 6, 5);
  PayoffTable pay;
  pay.weight.assign(s.nx() * s.ny() * s.nb(), 1);
  pay.divisor = 1;
  CHECK_THROWS_AS(classical_optimum(s, pay, 1000000), budget_error);
  CHECK_THROWS_AS(classical_optimum_decomposed(s, pay, 1000000), budget_error);
}

TEST_CASE("payoff validation rejects shape and sign errors") {
  const PrimeDim d(2);
  const TaskSpaces s = tiny_task(d, 2, 2, 2);
  PayoffTable short_table;
  short_table.weight.assign(7, 1);
  CHECK_THROWS_AS(validate_payoff(s, short_table), validation_error);
  PayoffTable negative;
  negative.weight.assign(8, 1);
  negative.weight[3] = -2;
  CHECK_THROWS_AS(validate_payoff(s, negative), validation_error);
  PayoffTable zero_div;
  zero_div.weight.assign(8, 1);
  zero_div.divisor = 0;
  CHECK_THROWS_AS(validate_payoff(s, zero_div), validation_error);
}

TEST_CASE("majority vote is classically optimal up to four bits") {
  for (int n = 2; n <= 4; ++n) {
    const RacTask task(n);
    const MeidCheck check = meid_is_optimal_check(task);
    CAPTURE(n);
    REQUIRE(check.optimal);
    REQUIRE(check.gap == Rat(0));
    CHECK(check.search.method == "exhaustive");
  }
}

TEST_CASE("the three-bit game cannot beat three quarters classically") {
  const RacTask task(3);
  const OptReport rep = classical_optimum(task.spaces(), rac_payoff(task));
  CHECK(rep.best == Rat(3, 4));
}
