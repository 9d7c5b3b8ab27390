#include "hypdef/parallel.hpp"

#include <algorithm>
#include <exception>
#include <omp.h>

namespace hypdef {

std::vector<double> evaluate_indexed(std::size_t n, const std::function<double(std::size_t)>& f,
                                     Exec exec) {
  std::vector<double> values(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) values[i] = f(i);
    return values;
  }
  std::exception_ptr error;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    try {
      values[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hypdef_evaluate_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return values;
}

double ordered_sum(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double ordered_max(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace hypdef
