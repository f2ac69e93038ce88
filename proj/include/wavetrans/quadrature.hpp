#pragma once

#include <vector>

namespace wavetrans {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [a, b], exact for polynomials up to degree 2n-1.
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

template <typename F>
double integrate(const QuadratureRule& rule, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(rule.nodes[i]);
  }
  return acc;
}

}  // namespace wavetrans
