#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hypdef {

enum class Exec { Serial, Parallel };

// values[i] = f(i). The parallel path distributes indices over OpenMP threads;
// both paths produce identical vectors. The first exception thrown by f is
// rethrown after the loop.
std::vector<double> evaluate_indexed(std::size_t n, const std::function<double(std::size_t)>& f,
                                     Exec exec);

// Left-to-right reductions, independent of how the values were produced.
double ordered_sum(const std::vector<double>& values);
double ordered_max(const std::vector<double>& values);

// Number of threads the parallel path would use.
int parallel_threads();

}  // namespace hypdef
