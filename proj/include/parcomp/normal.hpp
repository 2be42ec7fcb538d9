#pragma once

namespace parcomp {

// Standard normal CDF, accurate to better than 1e-15 absolute (computed via
// erfc to avoid cancellation in the tails).
double normal_cdf(double x);

// Standard normal density.
double normal_pdf(double x);

// Inverse standard normal CDF on (0, 1). Wichura's PPND16 rational
// approximation polished with one Newton step; absolute error well below
// 1e-12 over the full open interval. Throws InvalidArgumentError outside
// (0, 1); returns +/-infinity exactly at 1 and 0 is *not* allowed.
double normal_quantile(double p);

}  // namespace parcomp
