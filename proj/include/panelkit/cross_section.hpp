#pragma once

#include "panelkit/panel.hpp"
#include "panelkit/test_result.hpp"

namespace panelkit {
namespace diag {

/// Pesaran CD statistic over pairwise-complete overlaps:
///   CD = sqrt(2 / (N(N-1))) * sum_{i<j} sqrt(T_ij) * corr_ij,
/// standard normal under cross-sectional independence. Pairs with fewer than
/// 3 overlapping periods are excluded with a warning.
TestResult pesaran_cd(const PanelMatrix& panel);

/// Rank-based statistic: average pairwise Spearman correlation R mapped to
///   FR = (T-1) ((N-1) R + 1),
/// chi-square with T-1 degrees of freedom under the null.
TestResult friedman_cd(const PanelMatrix& panel);

/// Average of squared pairwise Spearman correlations recentered by its null
/// mean 1/(T-1), scaled by N, against the Q-distribution (weighted chi-square
/// difference). Requires balanced overlap.
TestResult frees_cd(const PanelMatrix& panel);

/// Spearman rank correlation with average ranks for ties.
double spearman_correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace diag
}  // namespace panelkit
