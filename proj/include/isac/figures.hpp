#pragma once

#include <string>

#include "isac/config.hpp"

namespace isac {

// Curve data behind the paper-style plots, one CSV per id:
//   f4: T_c and T_sum vs K at L=1 (analytic + MC overlay)
//   f5: T_c over the (K,L) grid with the argmax row flagged
//   f6: T_s and T_sum vs Q for m_r in {10,20,40} (analytic)
//   f7: T_s vs Q with MC overlay and the ratio to the Q=1 row
//   f9: per-link (r_c, r_s) Pareto set for m_t in {20,30,40}, j_max=5
//   f11: ASE region frontier, corners and time-sharing segment vs m_t
std::string figure_csv(const RunConfig& cfg, const std::string& id, int threads = 0);

}  // namespace isac
