#pragma once

#include <ostream>
#include <string>

namespace hardy::figures {

// Figure data sets, CSV with a header row and 12 significant digits:
//   1: q = p sweep, basic estimates (p, k_B, A, B)
//   2: q = p sweep with the first-step bounds added (p, k_B, delta1, A, deltabar1, B)
//   3: p = 2, q = p + r, r in (0, 15]  (r, k_B, delta1, a_star, A, deltabar1, B)
//   4: same as 3 with p = 5
//   5: k_tilde - k for p in {1.1, 2, 5, 10, 20}, x = q - p in (0.0001, 25]
//   6: extremal power-law model, p = 2, r in [0, 100]  (r, A, deltabar1)
//   7: same as 6 with p = 5
void write_figure(int id, std::ostream& out);
void write_figure_file(int id, const std::string& path);

}  // namespace hardy::figures
