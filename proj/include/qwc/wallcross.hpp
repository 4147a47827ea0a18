#ifndef QWC_WALLCROSS_HPP
#define QWC_WALLCROSS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwc/quiver.hpp"
#include "qwc/rational_function.hpp"

namespace qwc {

// Ordered tuple (kI_1, ..., kI_j) of disjoint nonempty subsets of
// [alpha_0], |kI_i| divisible by beta_0, with strictly decreasing minima.
struct DecompositionDatum {
  std::vector<std::vector<int>> parts;  // each sorted ascending

  int j() const { return static_cast<int>(parts.size()); }
  long total_size() const;
  std::vector<long> d(long beta0) const;                // d_i = |kI_i| / beta_0
  std::vector<int> complement(long alpha0) const;       // kI_infinity
  std::vector<int> tail_union(std::size_t i, long alpha0) const;  // I_{>i}
  std::string to_string() const;
  friend bool operator<(const DecompositionDatum& a, const DecompositionDatum& b) {
    return a.parts < b.parts;
  }
  friend bool operator==(const DecompositionDatum& a, const DecompositionDatum& b) {
    return a.parts == b.parts;
  }
};

// D^ell(kI): subsets of kI of positive size divisible by beta_0 whose
// minimum is at most ell.  Lexicographic output order.
std::vector<std::vector<int>> dec_ell(int ell, const std::vector<int>& kI, long beta0);

// Dec_{beta0, j}^{alpha0}; lexicographic order on the part tuples.
std::vector<DecompositionDatum> dec_sets(long alpha0, long beta0, int j);
std::vector<DecompositionDatum> dec_all(long alpha0, long beta0);

// Signed inversion count #(ascents) - #(descents) between disjoint sets.
long s_statistic(const std::vector<int>& A, const std::vector<int>& B);

// gamma series: d -> gamma_d(theta), with gamma_0 = 1 by convention.
class GammaSeries {
public:
  enum class Mode { Symbolic, HandsawA1, Table };

  static GammaSeries symbolic(int max_d);
  static GammaSeries handsaw_a1(int max_d);
  static GammaSeries table(std::map<int, RationalFunction> values);
  // gamma backed by the destabilizing-object moduli of the one-framing
  // quiver: gamma_1 = 1 and gamma_d = 0 for d >= 2.
  static GammaSeries single_framing(int max_d);

  Mode mode() const { return mode_; }
  const RationalFunction& at(int d) const;
  int max_d() const;

private:
  Mode mode_ = Mode::Table;
  std::map<int, RationalFunction> values_;
};

// Wall-crossing bookkeeping: the combinatorial inputs of the coefficient
// assembly plus the derived linearization data when it is available.
struct WallCrossingContext {
  DimVector alpha;
  Wall beta;
  int zero = 0;                   // index in I with beta[zero] != 0
  RationalFunction beta_bar_inf;  // integer constant or a symbol
  // Linearization data, present when built from stability parameters.
  std::optional<std::vector<long>> theta_plus;
  std::optional<std::vector<long>> theta_minus;
  std::optional<long> D;

  long alpha0() const { return alpha[zero]; }
  long beta0() const { return beta[zero]; }
};

WallCrossingContext make_context(DimVector alpha, Wall beta, int zero,
                                 const RationalFunction& beta_bar_inf);

// Full context: derives beta_bar_infinity from the quiver and the integer
// theta vectors / the constant D from scaled stability parameters.
WallCrossingContext make_context(const FramedQuiver& q, const DimVector& alpha, const Wall& beta,
                                 const std::string& zero, const StabilityVector& zeta_plus,
                                 const StabilityVector& zeta_minus, const std::vector<Rat>& eta);

struct WallCrossTerm {
  DecompositionDatum datum;
  RationalFunction coefficient;
  DimVector target;  // alpha - |d| beta
  long k = 0;        // |d|
};

// One term per datum in Dec(alpha_0); the total wall-crossing correction is
// sum over terms of coefficient times the zeta^- integral at the target
// dimension.  No k = 0 term exists: every datum has at least one part.
std::vector<WallCrossTerm> wall_cross_terms(const WallCrossingContext& ctx,
                                            const GammaSeries& gamma);

struct RecursionBranch {
  std::vector<int> sharp;   // the chosen kI^sharp
  RationalFunction coefficient;
  int ell_next;             // min(kI^sharp) - 1
  std::vector<int> flat;    // remaining index set
  DimVector alpha_next;
};

// Single step of the residue recursion at level ell on the index set kI.
std::vector<RecursionBranch> recursion_step(const WallCrossingContext& ctx, int ell,
                                            const std::vector<int>& kI, const DimVector& alpha_cur,
                                            const GammaSeries& gamma);

// Drives recursion_step to exhaustion; returns datum -> accumulated
// coefficient, which must reproduce wall_cross_terms.
std::map<DecompositionDatum, RationalFunction> iterate_recursion(const WallCrossingContext& ctx,
                                                                 const GammaSeries& gamma);

// One-framing-arrow recursion residual: gamma_d minus the sum over subsets
// containing 1.  Zero for a consistent series.
RationalFunction gamma_consistency(const GammaSeries& gamma, int d, long beta0);

// The proper-subset part of the same sum (expected to vanish for the
// handsaw series).
RationalFunction proper_subset_vanishing(int d, long beta0, const GammaSeries& gamma);

// Exact sum of prod_i s(kI_i, I_{>i}) over decompositions of [n] with part
// sizes d_i * beta0.  Vanishes whenever the parts exhaust [n].
Int s_partition_vanishing(const std::vector<long>& d, long beta0, long n);

struct BinomialExperiment {
  RationalFunction lhs;
  RationalFunction rhs;
  bool equal = false;
};

// The open question after the adjoint theorem: sum of a_I over Dec(i, alpha0)
// against binom(alpha0, i) * A_{alpha0 - i}.  Reported, never asserted.
BinomialExperiment binomial_question_experiment(long alpha0, long beta0, long i,
                                                const GammaSeries& gamma,
                                                const RationalFunction& beta_bar_inf);

}  // namespace qwc

#endif
