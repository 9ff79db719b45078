#pragma once

#include <array>

#include "oneway/opt.hpp"
#include "oneway/polytope.hpp"
#include "oneway/simulation.hpp"

namespace oneway {

// Random-access coding over a single qubit (or bit): the sender holds an
// N-bit string, the receiver asks for position y and guesses that bit.
// Inputs are the 2^N strings written msb-first ("00", "01", ...),
// questions "1".."N", outputs "0"/"1".
class RacTask {
 public:
  explicit RacTask(int n_bits);
  int n_bits() const { return n_; }
  const TaskSpaces& spaces() const { return spaces_; }
  std::size_t n_strings() const { return std::size_t{1} << n_; }
  // Bit y (0-based from the left) of input string number x.
  int bit(std::size_t x, int y) const;

 private:
  int n_;
  TaskSpaces spaces_;
};

// Uniform success payoff: weight 1 on b = x_y, divisor 2^N * N.
PayoffTable rac_payoff(const RacTask& task);

// success(x) = (1/N) sum_y p(b = x_y | x, y), plus the uniform average.
struct SuccessReport {
  bool exact = false;
  Rat average{0};
  std::vector<Rat> per_string;          // populated when exact
  double average_value = 0.0;
  std::vector<double> per_string_value; // always populated
};
SuccessReport rac_success(const RacTask& task, const Correlation& corr);

// Majority-vote encoding with identity decoding; ties send 0.
ClassicalPureStrategy meid_strategy(const RacTask& task);

// Eigenstate protocols. Odd N = 2n+1: strings with a clear majority among
// the first 2n bits are prepared as the Z eigenstate of the majority
// value, tied strings as the X eigenstate of the last bit; questions
// 1..2n measure Z, question N measures X. Even N = 2n: the majority of
// the first 2n-1 bits is never tied; decoding measures Z except for
// question N, which measures X.
QuantumStrategy onmq_strategy(const RacTask& task);  // odd N >= 3
QuantumStrategy enmq_strategy(const RacTask& task);  // even N >= 2

// Closed-form per-string success of the eigenstate protocol for this
// parity: a clear majority with margin coefficient c (2k odd, 2k+1 even)
// gives (n + c/2 + 1/2) / N, an odd-N tie gives (n + 1) / N.
Rat eigenstate_per_string(const RacTask& task, std::size_t x);

// Margin coefficient of a string: sum of (-1)^bit over the majority
// window, in absolute value (0 for an odd-N tie).
int margin_coefficient(const RacTask& task, std::size_t x);

// Replace the prepared state of one input by an arbitrary qubit state and
// re-evaluate. The closed form expands the Born rule question by question
// and must agree with the dense evaluation to 1e-12; the scaled gain is
// 2N * (success(target) - base), whose ceiling over the XZ plane is
// sqrt(c^2 + 1) - c at tan(theta) = 1/c.
struct UpliftReport {
  SuccessReport strategy;
  double target_born = 0.0;
  double target_closed_form = 0.0;
  Rat target_base{0};
  double gain_scaled = 0.0;
  int coefficient = 0;
  bool tie = false;
  double optimal_theta = 0.0;
  BlochVector optimal_bloch;
  double max_gain_scaled = 0.0;
  double magic = 0.0;
  double plane_excess = 0.0;
};
UpliftReport single_magic_uplift(const RacTask& task, std::size_t target_x, const BlochVector& r);

// Fixed-protocol evaluations for hand-picked encodings. basis_per_y gives
// the measured basis (1 = Z, 2 = X, 3 = Y) per question; the closed form
// sums (1 + (-1)^{x_y} n_axis) / 2 and must match Born to 1e-12.
struct ProtocolReport {
  SuccessReport born;
  double closed_form = 0.0;
  double deviation = 0.0;
  double max_magic = 0.0;
  double max_plane_excess = 0.0;
};
ProtocolReport fixed_basis_protocol(const RacTask& task, const std::vector<int>& basis_per_y,
                                    const std::vector<BlochVector>& encode);

// The three decoding families studied for N = 3 (and the N = 2 one):
//   rac2: (Z, X); case 1: (X, X, X); case 2: (Z, X, Y); case 3: (X, X, Z).
std::vector<int> rac2_bases();
std::vector<int> rac3_case_bases(int case_id);

// Exact optimum over the 6 basis eigenstates per string, decodings fixed.
struct VertexOptimum {
  Rat best{0};
  std::vector<StabilizerStateId> argmax;  // first maximizer per string
  std::string method = "per-string-decomposed";
};
VertexOptimum stabilizer_vertex_optimum(const RacTask& task, const std::vector<int>& basis_per_y);
struct AssignmentOptimum {
  Rat best{0};
  std::vector<int> basis_per_y;  // first maximizer, assignments in lex order
  std::uint64_t assignments = 0;
};
AssignmentOptimum stabilizer_vertex_optimum_all(const RacTask& task);

// Optimum over unrestricted qubit encodings for fixed decodings, by per-
// string spherical grid search plus local refinement. The per-string
// objective is linear, so the exact optimum is the coefficient norm;
// `gap` reports how far the search landed from it.
struct BallOptimum {
  double best = 0.0;
  double analytic = 0.0;
  double gap = 0.0;
  std::vector<BlochVector> argmax;
  std::uint64_t evaluations = 0;
};
BallOptimum optimize_unrestricted(const RacTask& task, const std::vector<int>& basis_per_y,
                                  double refine_tol = 1e-9);
// Distinct bases per question: (Z, X) for N = 2, (Z, X, Y) for N = 3.
BallOptimum optimize_unrestricted(const RacTask& task, double refine_tol = 1e-9);
// One string freed to the ball, the others held at their best vertex.
BallOptimum single_magic_optimum(const RacTask& task, const std::vector<int>& basis_per_y,
                                 double refine_tol = 1e-9);

// XZ-plane scan: one prepared state is swept over the grid, placed and
// oriented optimally, with every other string at its best vertex.
enum class RegionTask { rac2, rac3 };
enum class RegionClass { stabilizer, magic_no_advantage, magic_advantage, boundary };
struct RegionSample {
  double nx = 0.0, nz = 0.0;
  RegionClass cls = RegionClass::stabilizer;
  double success = 0.0;
};
std::vector<RegionSample> advantage_region(RegionTask task, double step);
std::vector<RegionSample> advantage_region_serial(RegionTask task, double step);
const char* region_class_name(RegionClass cls);

// Exhaustive classical optimum vs the majority protocol; gap must vanish.
struct MeidCheck {
  bool optimal = false;
  Rat gap{0};
  OptReport search;
};
MeidCheck meid_is_optimal_check(const RacTask& task, std::uint64_t budget = 100000000);

}  // namespace oneway
