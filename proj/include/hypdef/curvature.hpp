#pragma once

#include <array>
#include <functional>

#include "hypdef/jet.hpp"

namespace hypdef {

using MetricJets = std::array<std::array<Jet, 3>, 3>;
using MetricField = std::function<MetricJets(const std::array<Jet, 3>&)>;

// Sectional curvatures of the coordinate planes (x0,x1), (x0,x2), (x1,x2) at x,
// assembled from Christoffel symbols of jets of the metric.
std::array<double, 3> coordinate_sectional_curvatures(const MetricField& g, const Vec3& x);

}  // namespace hypdef
