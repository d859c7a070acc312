#pragma once

// Twisted partial derivatives, the Laplacian and the Haar functional.

#include "twistcalc/ncalg.hpp"

namespace twistcalc {

/// lambda_n = 1 / (2^n n! (D, 2)_n) with (x, a)_n = x (x+a) ... (x+(n-1)a).
Rational haar_lambda(int n, int ambient_dim);

/// d_s(x^a f) = delta^a_s f + q_as x^a d_s f, on functions only.
Element partial(int s, const Element& f);
/// Sum_i d_i d_{i'}.
Element laplacian(const Element& f);

/// h(f): zero on odd monomials, lambda_n Delta^n on degree-2n monomials.
/// The normalisation uses the ambient dimension of f's context.
ExactScalar haar_plane(const Element& f);

}  // namespace twistcalc
