#ifndef QWC_WEIGHT_FORM_HPP
#define QWC_WEIGHT_FORM_HPP

#include <map>
#include <string>

#include "qwc/polynomial.hpp"

namespace qwc {

// Torus weight of a line: integer linear combination of variables plus an
// integer constant.
class WeightForm {
public:
  WeightForm() : constant_(0) {}
  explicit WeightForm(long c) : constant_(c) {}
  static WeightForm of(Var v, long coeff = 1) {
    WeightForm w;
    w.coeffs_[v] = coeff;
    return w;
  }

  long constant() const { return constant_; }
  const std::map<Var, long>& coeffs() const { return coeffs_; }

  bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }

  WeightForm& operator+=(const WeightForm& o) {
    constant_ += o.constant_;
    for (const auto& [v, c] : o.coeffs_) add(v, c);
    return *this;
  }
  WeightForm& operator-=(const WeightForm& o) {
    constant_ -= o.constant_;
    for (const auto& [v, c] : o.coeffs_) add(v, -c);
    return *this;
  }
  friend WeightForm operator+(WeightForm a, const WeightForm& b) { return a += b; }
  friend WeightForm operator-(WeightForm a, const WeightForm& b) { return a -= b; }
  WeightForm operator-() const {
    WeightForm w;
    w.constant_ = -constant_;
    for (const auto& [v, c] : coeffs_) w.coeffs_[v] = -c;
    return w;
  }
  friend bool operator==(const WeightForm& a, const WeightForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const WeightForm& a, const WeightForm& b) {
    if (a.constant_ != b.constant_) return a.constant_ < b.constant_;
    return a.coeffs_ < b.coeffs_;
  }

  Polynomial to_polynomial() const {
    Polynomial p{Rat(constant_)};
    for (const auto& [v, c] : coeffs_) {
      Polynomial t = Polynomial::variable(v);
      t.scale(Rat(c));
      p += t;
    }
    return p;
  }

private:
  void add(Var v, long c) {
    auto it = coeffs_.find(v);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_[v] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<Var, long> coeffs_;
  long constant_;
};

std::string to_string(const WeightForm& w);

}  // namespace qwc

#endif
