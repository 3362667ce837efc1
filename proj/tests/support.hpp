#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "heckeforge/cyclo.hpp"

namespace testing_support {

inline std::complex<double> to_complex(const heckeforge::CycloNum& z) {
  const double pi = std::acos(-1.0);
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < z.coeffs().size(); ++k)
    acc += z.coeffs()[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / z.order());
  return acc;
}

inline heckeforge::CycloNum random_cyclo(std::mt19937_64& rng, int r, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  heckeforge::CycloNum z;
  for (int k = 0; k < r; ++k)
    z += heckeforge::root_of_unity(r, k) * heckeforge::CycloNum(heckeforge::make_rational(num(rng), den(rng)));
  return z;
}

}  // namespace testing_support
