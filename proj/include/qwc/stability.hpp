#ifndef QWC_STABILITY_HPP
#define QWC_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qwc/quiver.hpp"

namespace qwc {

// Refined stability parameter (zeta, eta) for the enhanced quiver; eta_k > 0,
// with eta_0 = 0 by convention wherever an ell = 0 term appears.
struct SlopeParams {
  StabilityVector zeta;   // over internal vertices
  std::vector<Rat> eta;   // size L
};

// Dimension data of an enhanced representation: base alpha (infinity
// component fixed to 1) plus the flag profile dim V~_(0,k).  Steps are 0 or
// 1 and the profile ends at alpha[zero].
struct EnhancedDim {
  DimVector alpha;              // internal dims
  int zero;                     // index of the enhancement vertex in I
  std::vector<long> flag_dims;  // k = 1..L

  EnhancedDim(DimVector a, int zero_vertex, const std::vector<int>& kI, int L);

  long alpha0() const { return alpha[zero]; }
  int L() const { return static_cast<int>(flag_dims.size()); }
  long dim_V() const;                 // 1 + sum alpha_i
  std::vector<int> kI() const;        // step positions, |kI| = alpha0
};

// Sub-dimension data for slope evaluation.
struct EnhancedSubDim {
  int s_inf = 0;                 // 0 or 1
  DimVector s;                   // internal part
  std::vector<long> s_flag;      // flag part, may be shorter than L
};

struct ThetaVector {
  std::vector<Rat> internal_part;  // over I
  Rat infinity_part;
  std::vector<Rat> flag_part;      // k = 1..L
};

Rat slope(const SlopeParams& p, const DimVector& alpha, const EnhancedSubDim& sub);

// Linearization vector of the determinant form: for every sub-dimension
// S~ the determinant equals sum_i theta_i dim S~_i.
ThetaVector theta_vector(const SlopeParams& p, const EnhancedDim& ed);

// Chamber-compatibility of slopes for I-graded subspaces.  The ambient
// flag profile fixes mu(V); zetabar defaults to the orthogonal projection
// of p.zeta onto the wall hyperplane.
bool cond_a(const SlopeParams& p, const Wall& wall, const EnhancedDim& flag,
            const std::optional<StabilityVector>& zetabar = std::nullopt);

// The two sandwich inequalities, with eta_0 = 0.
bool cond_b(const SlopeParams& p, const Wall& wall, int ell, const EnhancedDim& flag);

// No vanishing integer combination over the box |l_k| <= alpha0.
bool two_stability(const std::vector<Rat>& eta, long alpha0, long beta0);

// eta_m > dim V * sum_{k>m} eta_k dim F_k for every m.
bool cond_c(const SlopeParams& p, const EnhancedDim& flag);

struct ParameterSearchResult {
  bool ok = false;
  StabilityVector zeta_plus;   // in C'
  StabilityVector zeta_minus;  // in C
  std::vector<Rat> eta;
  std::string failure;
};

// Constructive search for certified (zeta+, zeta-, eta); the result is
// re-checked against cond_a (both chambers), cond_b (zeta+), two_stability
// and cond_c before being returned as ok.
ParameterSearchResult find_parameters(const Wall& wall, int ell, const DimVector& alpha,
                                      const EnhancedDim& flag, const StabilityVector& zetabar,
                                      const Int& max_denominator = Int(1000000));

}  // namespace qwc

#endif
