#include "xywave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "xywave/errors.hpp"

namespace xyw {

namespace {

constexpr int kPanelOrder = 32;
constexpr int kMaxDoublings = 14;

GaussRule compute_gauss_legendre(int order) {
  // Newton iteration on the Legendre recurrence; roots are symmetric.
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[order - 1 - i] = rule.weights[i];
  }
  return rule;
}

// One composite pass: `panels` uniform panels per smooth piece, scaled by
// piece length so the node density is even across [0, pi].
double composite_pass(const std::function<double(double)>& f,
                      std::span<const double> edges, int panels_total) {
  const GaussRule& rule = gauss_legendre(kPanelOrder);
  const double full = edges.back() - edges.front();
  double sum = 0.0;
  for (size_t s = 0; s + 1 < edges.size(); ++s) {
    const double a = edges[s], b = edges[s + 1];
    const int panels =
        std::max(1, (int)std::lround(panels_total * (b - a) / full));
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * h;
      const double mid = lo + 0.5 * h;
      double acc = 0.0;
      for (int i = 0; i < kPanelOrder; ++i)
        acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
      sum += 0.5 * h * acc;
    }
  }
  return sum;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, const Quadrature& q,
                 double oscillation_hint) {
  return integrate(f, q, oscillation_hint, {});
}

double integrate(const std::function<double(double)>& f, const Quadrature& q,
                 double oscillation_hint, std::span<const double> breakpoints) {
  if (q.node_count < 1) throw std::invalid_argument("Quadrature: node_count must be >= 1");
  if (!(q.tolerance > 0.0)) throw std::invalid_argument("Quadrature: tolerance must be > 0");

  std::vector<double> edges;
  edges.push_back(0.0);
  for (double b : breakpoints)
    if (b > 0.0 && b < std::numbers::pi) edges.push_back(b);
  edges.push_back(std::numbers::pi);
  std::sort(edges.begin(), edges.end());

  const int budget =
      std::max(q.node_count, 64 + 8 * (int)std::ceil(std::max(0.0, oscillation_hint)));
  int panels = std::max<int>(edges.size() - 1, (budget + kPanelOrder - 1) / kPanelOrder);

  double prev = composite_pass(f, edges, panels);
  for (int round = 0; round < kMaxDoublings; ++round) {
    panels *= 2;
    const double next = composite_pass(f, edges, panels);
    if (std::abs(next - prev) <= q.tolerance * (1.0 + std::abs(next))) return next;
    prev = next;
  }
  throw ConvergenceError("integrate: panel doubling exhausted before reaching tolerance");
}

}  // namespace xyw
