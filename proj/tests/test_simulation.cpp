#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oneway/simulation.hpp"

using namespace oneway;

namespace {

Partitions random_partitions(const TaskSpaces& s, std::mt19937_64& rng) {
  const int d = s.dim();
  Partitions p;
  for (std::size_t x = 0; x < s.nx(); ++x)
    p.x_cells.push_back(1 + static_cast<int>(rng() % (d * (d + 1))));
  for (std::size_t y = 0; y < s.ny(); ++y)
    p.y_cells.push_back(1 + static_cast<int>(rng() % (d + 1)));
  return p;
}

TaskSpaces small_task(PrimeDim d, std::size_t nx, std::size_t ny) {
  std::vector<std::string> xs, ys, bs;
  for (std::size_t i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < ny; ++i) ys.push_back("y" + std::to_string(i));
  for (int b = 0; b < d.value(); ++b) bs.push_back(std::to_string(b));
  return {d, xs, ys, bs};
}

}  // namespace

TEST_CASE("classical table reproduces the born table on maximal tasks") {
  for (int dim : {2, 3, 5, 7}) {
    const PrimeDim d(dim);
    const SimulationCheck check = verify_simulation(maximal_task(d), maximal_partitions(d));
    CAPTURE(dim);
    CHECK(check.pass);
    CHECK(check.max_deviation < 1e-12);
  }
}

TEST_CASE("classical table reproduces the born table on random tasks") {
  std::mt19937_64 rng(3);
  for (int dim : {2, 3, 5}) {
    const PrimeDim d(dim);
    for (int trial = 0; trial < 8; ++trial) {
      const TaskSpaces s = small_task(d, 1 + rng() % 5, 1 + rng() % 4);
      const Partitions p = random_partitions(s, rng);
      const SimulationCheck check = verify_simulation(s, p);
      CAPTURE(dim);
      CAPTURE(trial);
      REQUIRE(check.pass);
    }
  }
}

TEST_CASE("exact marginal equals the explicit shared-dit expansion") {
  // Expanding over every used dit assignment and evaluating the resulting
  // mixture of deterministic strategies must give the marginal exactly.
  std::mt19937_64 rng(9);
  for (int dim : {2, 3}) {
    const PrimeDim d(dim);
    const TaskSpaces s = small_task(d, 3, 2);
    const Partitions p = random_partitions(s, rng);
    const SharedStrategy mix = expand_shared_simulation(s, {{Rat(1), p}});
    validate_shared(s, mix);
    const Correlation expanded = eval_shared(s, mix);
    const Correlation marginal = classical_simulation_exact(s, p);
    CHECK(correlation_distance(expanded, marginal) == 0.0);
  }
}

TEST_CASE("mixtures of extreme strategies stay exactly simulable") {
  std::mt19937_64 rng(21);
  const PrimeDim d(2);
  const TaskSpaces s = small_task(d, 4, 3);
  const Partitions p1 = random_partitions(s, rng);
  const Partitions p2 = random_partitions(s, rng);
  const Partitions p3 = random_partitions(s, rng);
  const std::vector<SharedSimAtom> atoms = {
      {Rat(1, 2), p1}, {Rat(1, 3), p2}, {Rat(1, 6), p3}};

  // Quantum side of the mixture.
  std::vector<Correlation> born;
  std::vector<Rat> weights;
  for (const auto& atom : atoms) {
    born.push_back(eval_stabilizer_exact(s, build_stabilizer_strategy(s, atom.partitions)));
    weights.push_back(atom.weight);
  }
  const Correlation quantum = mix_correlations(weights, born);

  // Classical side: expanded shared-randomness strategy.
  const Correlation classical = eval_shared(s, expand_shared_simulation(s, atoms));
  CHECK(correlation_distance(quantum, classical) == 0.0);
}

TEST_CASE("expansion refuses to blow past its atom bound") {
  const PrimeDim d(5);
  const TaskSpaces s = maximal_task(d);
  const Partitions p = maximal_partitions(d);
  // All six dits used: 5^6 assignments exceed a bound of 1000.
  CHECK_THROWS_AS(expand_shared_simulation(s, {{Rat(1), p}}, 1000), validation_error);
}

TEST_CASE("partition validation rejects out-of-range cells") {
  const PrimeDim d(2);
  const TaskSpaces s = small_task(d, 2, 2);
  CHECK_THROWS_AS(validate_partitions(s, {{0, 1}, {1, 2}}), validation_error);
  CHECK_THROWS_AS(validate_partitions(s, {{1, 7}, {1, 2}}), validation_error);
  CHECK_THROWS_AS(validate_partitions(s, {{1, 2}, {1, 4}}), validation_error);
  CHECK_THROWS_AS(validate_partitions(s, {{1}, {1, 2}}), validation_error);
  CHECK_NOTHROW(validate_partitions(s, {{1, 6}, {3, 2}}));
}

TEST_CASE("parallel and serial samplers produce identical tallies") {
  const PrimeDim d(3);
  const TaskSpaces s = maximal_task(d);
  const Partitions p = maximal_partitions(d);
  for (std::uint64_t seed : {0ULL, 42ULL}) {
    const SampledReport par = classical_simulation_sampled(s, p, 20000, seed);
    const SampledReport ser = classical_simulation_sampled_serial(s, p, 20000, seed);
    CAPTURE(seed);
    CHECK(correlation_distance(par.correlation, ser.correlation) == 0.0);
    CHECK(par.max_std_error == ser.max_std_error);
  }
  // And the tally is a pure function of (samples, seed).
  const SampledReport again = classical_simulation_sampled(s, p, 20000, 42);
  const SampledReport first = classical_simulation_sampled(s, p, 20000, 42);
  CHECK(correlation_distance(again.correlation, first.correlation) == 0.0);
}

TEST_CASE("sampled frequencies converge at the binomial rate") {
  const PrimeDim d(2);
  const TaskSpaces s = maximal_task(d);
  const Partitions p = maximal_partitions(d);
  const Correlation exact = classical_simulation_exact(s, p);
  double prev = 1.0;
  for (std::uint64_t n : {1000ULL, 16000ULL, 256000ULL}) {
    const SampledReport rep = classical_simulation_sampled(s, p, n, 1234);
    const double dev = correlation_distance(rep.correlation, exact);
    // Six standard errors at worst-case variance.
    CHECK(dev < 6.0 * std::sqrt(0.25 / static_cast<double>(n)));
    CHECK(dev < prev);
    prev = dev;
  }
  for (std::uint64_t n : {1000ULL, 4000ULL}) {
    const SimulationCheck check = verify_simulation_sampled(s, p, n, 7);
    CHECK(check.pass);
    CHECK(check.samples == n);
  }
}

TEST_CASE("stabilizer strategy construction needs d outputs") {
  const PrimeDim d(3);
  const TaskSpaces bad{d, {"x0"}, {"y0"}, {"0", "1"}};
  CHECK_THROWS_AS(build_stabilizer_strategy(bad, {{1}, {1}}), validation_error);
}
