#ifndef QWC_LOCALIZATION_HPP
#define QWC_LOCALIZATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwc/kclass.hpp"
#include "qwc/quiver.hpp"

namespace qwc {

struct FixedPoint {
  std::string label;
  std::vector<WeightForm> tangent;          // nonzero weights, isolated point
  std::map<std::string, KClass> bundles;    // named tautological restrictions
};

struct FixedPointModel {
  std::vector<FixedPoint> points;
  std::vector<Var> params;  // equivariant parameters x_1..x_n
};

// Coordinate k-subsets of [n]; tangent Hom(S, C^n/S) = {x_t - x_s}.
// Bundle "taut" restricts to {x_s : s in S}.
FixedPointModel grassmannian_model(int k, int n, const std::string& var_prefix = "x");

// Partial flag of coordinate subspaces with the given dimension steps;
// tangent sum_a Hom(F_a / F_{a-1}, C^n / F_a).  Bundles "F1".."Fs".
FixedPointModel flag_model(const std::vector<int>& dims, int n,
                           const std::string& var_prefix = "x");

// Spanning-framing realization of the zeta^- moduli of the one-vertex
// quiver: the same fixed points as the Grassmannian but with the quotient
// tangent Hom(ker, V_0) = {x_s - x_t}.
FixedPointModel framed_span_model(int k, int n, const std::string& var_prefix = "x");

// Tangent class of a fixed point as a KClass (plus part only).
KClass tangent_class(const FixedPoint& p);

// Lambda_Q assembled per fixed point: arrows add Hom terms, relations and
// endomorphisms subtract.  assignment maps internal vertices to bundle
// names ("0" denotes the rank-zero bundle); framing arrows consume
// framing_weights in quiver arrow order.
std::vector<KClass> lambda_class(const FramedQuiver& q, const FixedPointModel& m,
                                 const std::map<std::string, std::string>& assignment,
                                 const std::vector<WeightForm>& framing_weights);

long lambda_rank(const FramedQuiver& q, const std::map<std::string, long>& dims);

// Atiyah-Bott sum over fixed points: Eu^twist(integrand) / Eu(tangent).
RationalFunction ab_integrate(const FixedPointModel& m, const std::vector<KClass>& integrand,
                              std::optional<Var> twist);

struct AdjointExperiment {
  RationalFunction lhs;
  RationalFunction rhs;
  bool equal = false;
};

// Both sides of the adjoint wall-crossing identity for the one-vertex
// quiver with r framing arrows: localization over the spanning-framing
// models against the combinatorial assembly with gamma_1 = 1, gamma_{>=2}
// = 0 and beta_bar_infinity = r.
AdjointExperiment adjoint_experiment(long r, long alpha0);

}  // namespace qwc

#endif
