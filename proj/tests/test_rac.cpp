#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oneway/rac.hpp"

using namespace oneway;

namespace {

SuccessReport eval_named(const RacTask& task, const QuantumStrategy& q) {
  return rac_success(task, eval_stabilizer_exact(task.spaces(), q));
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("majority encoding with identity decoding hits the known values") {
  const SuccessReport two = rac_success(
      RacTask(2), eval_classical(RacTask(2).spaces(), meid_strategy(RacTask(2))));
  CHECK(two.exact);
  CHECK(two.average == Rat(3, 4));

  const RacTask five(5);
  const SuccessReport rep =
      rac_success(five, eval_classical(five.spaces(), meid_strategy(five)));
  CHECK(rep.average == Rat(11, 16));
  // 00000 always answers right; 00111 answers 1 and hits three positions.
  CHECK(rep.per_string[0] == Rat(1));
  CHECK(rep.per_string[7] == Rat(3, 5));
}

TEST_CASE("eigenstate protocols match their closed form per string") {
  for (int n : {3, 5, 7}) {
    const RacTask task(n);
    const SuccessReport rep = eval_named(task, onmq_strategy(task));
    CHECK(rep.exact);
    for (std::size_t x = 0; x < task.n_strings(); ++x) {
      CAPTURE(n);
      CAPTURE(x);
      REQUIRE(rep.per_string[x] == eigenstate_per_string(task, x));
    }
  }
  for (int n : {2, 4, 6}) {
    const RacTask task(n);
    const SuccessReport rep = eval_named(task, enmq_strategy(task));
    for (std::size_t x = 0; x < task.n_strings(); ++x) {
      CAPTURE(n);
      CAPTURE(x);
      REQUIRE(rep.per_string[x] == eigenstate_per_string(task, x));
    }
  }
}

TEST_CASE("five-bit eigenstate values land on the published grid") {
  const RacTask task(5);
  const SuccessReport rep = eval_named(task, onmq_strategy(task));
  CHECK(rep.average == Rat(11, 16));
  // Margins 4, 2, 0 give 9/10, 7/10, 3/5.
  CHECK(rep.per_string[0] == Rat(9, 10));           // 00000
  CHECK(rep.per_string[0b00010] == Rat(7, 10));     // margin 2
  CHECK(rep.per_string[0b00110] == Rat(3, 5));      // tied window
  CHECK(margin_coefficient(task, 0) == 4);
  CHECK(margin_coefficient(task, 0b00010) == 2);
  CHECK(margin_coefficient(task, 0b00110) == 0);

  const RacTask four(4);
  const SuccessReport even = eval_named(four, enmq_strategy(four));
  CHECK(even.average == Rat(11, 16));
  CHECK(even.per_string[0] == Rat(7, 8));       // margin 3
  CHECK(even.per_string[0b0010] == Rat(5, 8));  // margin 1
}

TEST_CASE("eigenstate and majority averages coincide for every tested size") {
  for (int n = 2; n <= 8; ++n) {
    const RacTask task(n);
    const QuantumStrategy q = n % 2 == 1 ? onmq_strategy(task) : enmq_strategy(task);
    const SuccessReport quantum = eval_named(task, q);
    const SuccessReport classical =
        rac_success(task, eval_classical(task.spaces(), meid_strategy(task)));
    CAPTURE(n);
    REQUIRE(quantum.average == classical.average);
  }
}

TEST_CASE("replacing one prepared state beats the protocol exactly when predicted") {
  // Odd case: margins 2 and 4 at five bits.
  const RacTask five(5);
  for (int k : {1, 2}) {
    const int c = 2 * k;
    const double theta = std::atan2(1.0, c);
    // Smallest string with that window margin, last bit zero.
    std::size_t x = 0;
    const int zeros = (4 + c) / 2;
    for (int y = zeros; y < 4; ++y) x |= std::size_t{1} << (4 - y);
    const UpliftReport rep =
        single_magic_uplift(five, x, BlochVector{std::sin(theta), 0.0, std::cos(theta)});
    CAPTURE(k);
    CHECK(rep.coefficient == c);
    CHECK_FALSE(rep.tie);
    CHECK(std::abs(rep.target_born - rep.target_closed_form) < 1e-12);
    const double expected = std::sqrt(c * c + 1.0) - c;
    CHECK(std::abs(rep.gain_scaled - expected) < 1e-12);
    CHECK(std::abs(rep.max_gain_scaled - expected) < 1e-12);
    CHECK(std::abs(rep.optimal_theta - theta) < 1e-12);
    CHECK(rep.gain_scaled > 0.0);
    CHECK(rep.magic > 0.0);
  }

  // Even case: margins 1 and 3 at four bits.
  const RacTask four(4);
  for (int k : {0, 1}) {
    const int c = 2 * k + 1;
    const double theta = std::atan2(1.0, c);
    std::size_t x = 0;
    const int zeros = (3 + c) / 2;
    for (int y = zeros; y < 3; ++y) x |= std::size_t{1} << (3 - y);
    const UpliftReport rep =
        single_magic_uplift(four, x, BlochVector{std::sin(theta), 0.0, std::cos(theta)});
    CAPTURE(k);
    CHECK(rep.coefficient == c);
    CHECK(std::abs(rep.gain_scaled - (std::sqrt(c * c + 1.0) - c)) < 1e-12);
    CHECK(rep.gain_scaled > 0.0);
  }

  // A stabilizer replacement (theta = 0) cannot improve on the protocol.
  const UpliftReport flat = single_magic_uplift(five, 0, BlochVector{0.0, 0.0, 1.0});
  CHECK(std::abs(flat.gain_scaled) < 1e-12);
  CHECK(flat.magic == 0.0);
}

TEST_CASE("tied odd strings gain nothing anywhere in the plane") {
  const RacTask five(5);
  const std::size_t tied = 0b00110;
  for (double theta : {0.0, 0.3, kPi / 4, kPi / 2}) {
    const UpliftReport rep =
        single_magic_uplift(five, tied, BlochVector{std::sin(theta), 0.0, std::cos(theta)});
    CAPTURE(theta);
    CHECK(rep.tie);
    CHECK(rep.gain_scaled <= 1e-12);
    CHECK(std::abs(rep.max_gain_scaled) < 1e-12);
  }
}

TEST_CASE("two-bit suite: vertices, one magic state, and the unrestricted ball") {
  const RacTask task(2);
  const VertexOptimum vert = stabilizer_vertex_optimum(task, rac2_bases());
  CHECK(vert.best == Rat(3, 4));
  const AssignmentOptimum all = stabilizer_vertex_optimum_all(task);
  CHECK(all.best == Rat(3, 4));
  CHECK(all.assignments == 9);

  const BallOptimum one = single_magic_optimum(task, rac2_bases());
  CHECK(std::abs(one.best - (11.0 + std::sqrt(2.0)) / 16.0) < 1e-9);
  CHECK(std::abs(one.analytic - (11.0 + std::sqrt(2.0)) / 16.0) < 1e-12);

  const BallOptimum ball = optimize_unrestricted(task);
  const double grand = 0.5 * (1.0 + 1.0 / std::sqrt(2.0));
  CHECK(std::abs(ball.analytic - grand) < 1e-12);
  CHECK(std::abs(ball.best - grand) < 1e-9);
  CHECK(ball.gap < 1e-9);
}

TEST_CASE("three-bit suite across the decoding families") {
  const RacTask task(3);

  // Distinct bases: stabilizer 2/3, one magic state below 3/4, ball optimum.
  const VertexOptimum vert = stabilizer_vertex_optimum(task, rac3_case_bases(2));
  CHECK(vert.best == Rat(2, 3));
  const BallOptimum one = single_magic_optimum(task, rac3_case_bases(2));
  const double case2 = (31.0 + std::sqrt(3.0)) / 48.0;
  CHECK(std::abs(one.best - case2) < 1e-9);
  CHECK(std::abs(one.gap) < 1e-9);
  CHECK(one.best < 0.75);
  const BallOptimum ball = optimize_unrestricted(task);
  const double grand = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
  CHECK(std::abs(ball.analytic - grand) < 1e-12);
  CHECK(std::abs(ball.best - grand) < 1e-9);

  // Repeated bases: magic buys nothing in case 1, the whole plane caps at 3/4.
  const BallOptimum case1 = optimize_unrestricted(task, rac3_case_bases(1));
  CHECK(std::abs(case1.analytic - 0.75) < 1e-12);
  const VertexOptimum case1_vert = stabilizer_vertex_optimum(task, rac3_case_bases(1));
  CHECK(case1_vert.best == Rat(3, 4));

  // Mixed bases: one magic state pushes past the stabilizer ceiling.
  const VertexOptimum case3_vert = stabilizer_vertex_optimum(task, rac3_case_bases(3));
  CHECK(case3_vert.best == Rat(3, 4));
  const BallOptimum case3 = single_magic_optimum(task, rac3_case_bases(3));
  const double expected = 0.5 + (10.0 + std::sqrt(5.0)) / 48.0;
  CHECK(std::abs(case3.best - expected) < 1e-9);
  CHECK(case3.best > 0.75);

  // The best basis assignment overall is still the stabilizer 3/4.
  const AssignmentOptimum all = stabilizer_vertex_optimum_all(task);
  CHECK(all.best == Rat(3, 4));
  CHECK(all.assignments == 27);
}

TEST_CASE("fixed protocols agree with their coefficient closed form") {
  const RacTask task(2);
  const std::vector<BlochVector> plus_zero = {
      {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)},
      {0.0, 0.0, 1.0},
      {1.0, 0.0, 0.0},
      {0.0, 0.0, -1.0}};
  const ProtocolReport rep = fixed_basis_protocol(task, rac2_bases(), plus_zero);
  CHECK(rep.deviation < 1e-12);
  // One prepared state off the octahedron, gaining on the base protocol.
  CHECK(rep.max_magic > 0.0);
  CHECK(rep.born.average_value > 0.75);
  CHECK(std::abs(rep.born.average_value - (11.0 + std::sqrt(2.0)) / 16.0) < 1e-12);
}

TEST_CASE("parallel region scan equals the serial reference") {
  for (RegionTask t : {RegionTask::rac2, RegionTask::rac3}) {
    const auto par = advantage_region(t, 0.2);
    const auto ser = advantage_region_serial(t, 0.2);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].nx == ser[i].nx);
      CHECK(par[i].nz == ser[i].nz);
      CHECK(par[i].cls == ser[i].cls);
      CHECK(par[i].success == ser[i].success);
    }
  }
}

TEST_CASE("region classes follow the octagon and the disk") {
  const auto samples = advantage_region(RegionTask::rac3, 0.05);
  int advantage = 0, boundary = 0, plain_magic = 0;
  for (const RegionSample& s : samples) {
    const double l1 = std::abs(s.nx) + std::abs(s.nz);
    const double oct = std::max(2 * std::abs(s.nx) + std::abs(s.nz),
                                std::abs(s.nx) + 2 * std::abs(s.nz));
    CAPTURE(s.nx);
    CAPTURE(s.nz);
    if (l1 <= 1.0 + 1e-12) {
      REQUIRE(s.cls == RegionClass::stabilizer);
    } else if (oct > 2.0 + 1e-9) {
      REQUIRE(s.cls == RegionClass::magic_advantage);
      REQUIRE(s.success > 0.75);
      ++advantage;
    } else if (oct < 2.0 - 1e-9) {
      REQUIRE(s.cls == RegionClass::magic_no_advantage);
      REQUIRE(s.success < 0.75);
      ++plain_magic;
    } else {
      ++boundary;
    }
  }
  CHECK(advantage > 0);
  CHECK(plain_magic > 0);

  // Two-bit scan: every magic point in the plane is advantageous.
  for (const RegionSample& s : advantage_region(RegionTask::rac2, 0.05)) {
    const double l1 = std::abs(s.nx) + std::abs(s.nz);
    if (l1 > 1.0 + 1e-9) {
      REQUIRE(s.cls == RegionClass::magic_advantage);
      REQUIRE(std::abs(s.success - (11.0 + l1) / 16.0) < 1e-12);
    }
  }
}

TEST_CASE("task construction rejects out-of-range sizes") {
  CHECK_THROWS_AS(RacTask(0), validation_error);
  CHECK_THROWS_AS(RacTask(17), validation_error);
  CHECK_THROWS_AS(rac3_case_bases(4), validation_error);
}
