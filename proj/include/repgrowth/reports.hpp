#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "repgrowth/checks.hpp"
#include "repgrowth/gaussian.hpp"
#include "repgrowth/tensor_growth.hpp"

namespace repgrowth {

/// Fixed 12-decimal rendering used in every report, so reruns are byte
/// identical across platforms with the same libm-free formatting.
std::string format_double(double v);

/// series.csv: n,b_exact,b_normalized,support_size,seconds.  b_exact is
/// blank in normalized mode; seconds renders as 0 unless timings is set
/// (wall-clock noise would break rerun determinism).
void write_series_csv(std::ostream& os, const GrowthSeries& series, bool timings);

/// Inverse of write_series_csv, tolerant of a blank b_exact column.
std::vector<GrowthRow> read_series_csv(std::istream& is);

void write_fit_json(std::ostream& os, const std::string& group, const std::string& mode,
                    const FitResult& fit, double tolerance);

void write_check_json(std::ostream& os, const std::string& group, const CheckReport& report);

/// compare.csv: kind,n,lambda,exact_normalized,approx,ratio.  lambda is a
/// space-separated coordinate list for "a" rows, blank for "b" rows.
void write_compare_csv(std::ostream& os, const std::vector<CompareRow>& rows);

void write_moments_json(std::ostream& os, const std::string& group, const RepSpec& spec,
                        const MomentData& md);

}  // namespace repgrowth
