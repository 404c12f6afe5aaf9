#pragma once

#include "sojourn/rational.hpp"

#include <utility>

namespace sojourn {

/// Index into the even set E = {0, 2, 4, ...}. Odd or negative values are a
/// hard error at this layer; parity-vanishing conventions live higher up.
class EvenIndex {
  public:
    explicit EvenIndex(long i) : i_(i) {
        if (i < 0 || i % 2 != 0)
            throw std::domain_error("EvenIndex: index must be even and non-negative");
    }
    long value() const { return i_; }

  private:
    long i_;
};

/// a_i = C(i, i/2) / (i + 2), the aerated-Catalan weights appearing in the
/// expansion of sqrt(1 - 4z^2).
Rat a_coeff(EvenIndex i);

/// b_i = C(i, i/2) = (i + 2) a_i, the central binomial coefficients.
Rat b_coeff(EvenIndex i);

/// (sum_{j in E, j <= i} a_j a_{i-j}, sum_{j in E, j <= i} a_j b_{i-j}).
/// Callers assert these equal a_{i+2}/2 and b_{i+2}/4 respectively.
std::pair<Rat, Rat> convolution_check(EvenIndex i);

}  // namespace sojourn
