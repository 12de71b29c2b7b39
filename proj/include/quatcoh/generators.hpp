#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quatcoh/algebra.hpp"
#include "quatcoh/session.hpp"

namespace quatcoh {

/// The same algebra in the coframe f = P·e: structure constants are
/// rewritten and I, J become P·I·P⁻¹, P·J·P⁻¹. P must be real.
Algebra change_basis(const Algebra& alg, const Matrix& p);

/// Product of a few random integer shears and a permutation; invertible,
/// real, with small entries.
Matrix random_real_basis_change(std::size_t dim, std::mt19937& rng);

/// Structure constants multiplied term by term by small random rationals;
/// up to `attempts` draws are tried and the first that still validates is
/// kept. Otherwise every constant is scaled by one common factor, which
/// always validates.
Algebra perturb_coefficients(const Algebra& alg, std::mt19937& rng, int attempts = 40);

/// A random t = p/q in (0,1) with q <= max_den, avoiding t = 1/2.
Rational random_parameter(std::mt19937& rng, long max_den);

/// Shapes a random double complex is assembled from.
struct ComplexShape {
  std::size_t dots = 0;
  std::size_t squares = 0;
  std::size_t zigzags = 0;
  /// Per degree, the number of dots placed there.
  std::vector<std::size_t> dots_per_degree;
};

/// Random double complex on degrees 0..top: a direct sum of dots, squares
/// and zigzags, then a random change of basis in every degree (Gaussian
/// integer shears, so entries leave ℚ).
DoubleComplex random_double_complex(int top, std::mt19937& rng, ComplexShape* shape = nullptr);

/// Same construction without zigzags: dim E1 = dim E2 = number of dots in
/// each degree.
DoubleComplex random_dot_square_complex(int top, std::mt19937& rng, ComplexShape* shape);

}  // namespace quatcoh
