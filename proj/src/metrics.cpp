#include "cgc/metrics.hpp"

#include <stdexcept>

namespace cgc {

double metric_dev(double val1, double val2) {
    if (val2 == 0.0) throw std::domain_error("metric_dev: reference value is zero");
    return 100.0 * (val1 - val2) / val2;
}

double metric_diff(double mean_new, double mean_base) {
    if (mean_base == 0.0) throw std::domain_error("metric_diff: base mean is zero");
    return 100.0 * (mean_new - mean_base) / mean_base;
}

}  // namespace cgc
