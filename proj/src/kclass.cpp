#include "qwc/kclass.hpp"

#include <sstream>
#include <stdexcept>

namespace qwc {

std::string to_string(const WeightForm& w) { return to_string(w.to_polynomial()); }

RationalFunction euler_theta(const KClass& c, Var theta) {
  Polynomial th = Polynomial::variable(theta);
  Polynomial num(Rat(1));
  for (const WeightForm& w : c.plus) num *= w.to_polynomial() + th;
  Polynomial den(Rat(1));
  for (const WeightForm& w : c.minus) {
    Polynomial factor = w.to_polynomial() + th;
    if (factor.is_zero())
      throw std::domain_error("euler_theta: zero factor in denominator");
    den *= factor;
  }
  return RationalFunction(num, den);
}

RationalFunction euler_plain(const KClass& c) {
  Polynomial num(Rat(1));
  for (const WeightForm& w : c.plus) {
    if (w.is_zero()) throw std::domain_error("euler_plain: zero weight (non-isolated fixed point)");
    num *= w.to_polynomial();
  }
  Polynomial den(Rat(1));
  for (const WeightForm& w : c.minus) {
    if (w.is_zero()) throw std::domain_error("euler_plain: zero weight (non-isolated fixed point)");
    den *= w.to_polynomial();
  }
  return RationalFunction(num, den);
}

}  // namespace qwc
