#pragma once

#include <string>

#include "zrl/zeta_engine.hpp"

namespace zrl {

// Plain-text zero catalog cache. First line is
//   # zrl-zeros v1 T=<height> step=<step>
// followed by one `index<TAB>ordinate` record per line, ordinates printed to
// 12 significant digits, LF line endings.
void save_zero_cache(const ZeroCatalog& catalog, const std::string& path);

// Validates on load: header shape, strictly increasing ordinates, and
// |Z(gamma)| < 1e-4 for the first and last three records. Every failure
// names the offending line. Brackets are synthesized at ordinate +/- 1e-9
// since the text format stores the refined point only.
ZeroCatalog load_zero_cache(const std::string& path);

}  // namespace zrl
