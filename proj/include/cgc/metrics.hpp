// Percent-deviation metrics used in benchmark tables.

#ifndef CGC_METRICS_HPP
#define CGC_METRICS_HPP

namespace cgc {

// 100 * (val1 - val2) / val2. Throws std::domain_error when val2 == 0.
double metric_dev(double val1, double val2);

// 100 * (mean_new - mean_base) / mean_base, on unrounded means.
// Throws std::domain_error when mean_base == 0.
double metric_diff(double mean_new, double mean_base);

}  // namespace cgc

#endif
