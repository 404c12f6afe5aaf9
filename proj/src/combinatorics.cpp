#include "sojourn/combinatorics.hpp"

namespace sojourn {

Rat a_coeff(EvenIndex i) {
    const long v = i.value();
    return Rat(binomial(v, v / 2), Int(v + 2));
}

Rat b_coeff(EvenIndex i) {
    const long v = i.value();
    return Rat(binomial(v, v / 2));
}

std::pair<Rat, Rat> convolution_check(EvenIndex i) {
    const long v = i.value();
    Rat aa(0);
    Rat ab(0);
    for (long j = 0; j <= v; j += 2) {
        const Rat aj = a_coeff(EvenIndex(j));
        aa += aj * a_coeff(EvenIndex(v - j));
        ab += aj * b_coeff(EvenIndex(v - j));
    }
    return {aa, ab};
}

}  // namespace sojourn
