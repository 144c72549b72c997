#include "segnoise/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace segnoise {

namespace {

constexpr double kLogClamp = 1e-12;

void require_same_shape(const Grid& a, const Grid& b) {
  if (!a.same_shape(b)) throw ShapeMismatch("metric operands must share one shape");
}

double mean_product(const Grid& a, const Grid& b) {
  const auto av = a.values();
  const auto bv = b.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) sum += av[i] * bv[i];
  return sum / static_cast<double>(av.size());
}

}  // namespace

MetricValue cross_entropy(const MarginalGrid& m, const MarginalGrid& c) {
  require_same_shape(m.grid(), c.grid());
  const auto mv = m.grid().values();
  const auto cv = c.grid().values();
  double sum = 0.0;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    const double ci = std::clamp(cv[i], kLogClamp, 1.0 - kLogClamp);
    sum += mv[i] * std::log(ci) + (1.0 - mv[i]) * std::log(1.0 - ci);
  }
  return {-sum / static_cast<double>(mv.size()), MetricKind::CrossEntropy};
}

MetricValue soft_dice(const MarginalGrid& m, const MarginalGrid& c) {
  require_same_shape(m.grid(), c.grid());
  const double denom = mean(c.grid()) + mean(m.grid());
  if (denom == 0.0) throw DegenerateDenominator("soft_dice needs mean(c) + mean(m) > 0");
  return {1.0 - 2.0 * mean_product(c.grid(), m.grid()) / denom, MetricKind::SoftDice};
}

MetricValue accuracy(const MarginalGrid& m, const SegmentationGrid& s) {
  require_same_shape(m.grid(), s.grid());
  const auto mv = m.grid().values();
  const auto sv = s.grid().values();
  double sum = 0.0;
  for (std::size_t i = 0; i < mv.size(); ++i)
    sum += sv[i] * mv[i] + (1.0 - sv[i]) * (1.0 - mv[i]);
  return {sum / static_cast<double>(mv.size()), MetricKind::Accuracy};
}

MetricValue dice(const MarginalGrid& m, const SegmentationGrid& s) {
  require_same_shape(m.grid(), s.grid());
  const double denom = mean(s.grid()) + mean(m.grid());
  if (denom == 0.0) throw DegenerateDenominator("dice needs mean(s) + mean(m) > 0");
  return {2.0 * mean_product(s.grid(), m.grid()) / denom, MetricKind::Dice};
}

}  // namespace segnoise
