#ifndef QWC_KCLASS_HPP
#define QWC_KCLASS_HPP

#include <vector>

#include "qwc/rational_function.hpp"
#include "qwc/weight_form.hpp"

namespace qwc {

// Formal difference E - F of sums of lines, stored as weight multisets.
struct KClass {
  std::vector<WeightForm> plus;
  std::vector<WeightForm> minus;

  long rank() const {
    return static_cast<long>(plus.size()) - static_cast<long>(minus.size());
  }

  KClass& add(const WeightForm& w) {
    plus.push_back(w);
    return *this;
  }
  KClass& sub(const WeightForm& w) {
    minus.push_back(w);
    return *this;
  }
  KClass& direct_sum(const KClass& o) {
    plus.insert(plus.end(), o.plus.begin(), o.plus.end());
    minus.insert(minus.end(), o.minus.begin(), o.minus.end());
    return *this;
  }
};

// Eu^theta(E - F) = prod_{w in E}(w + theta) / prod_{w in F}(w + theta).
RationalFunction euler_theta(const KClass& c, Var theta);

// Untwisted Euler class; every weight must be nonzero (isolated fixed point).
RationalFunction euler_plain(const KClass& c);

}  // namespace qwc

#endif
