#include "zrl/zero_cache.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "zrl/errors.hpp"

namespace zrl {

namespace {

std::string real12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void recheck_entry(const ZeroRecord& rec, long line) {
  double z;
  try {
    z = hardy_z(rec.ordinate);
  } catch (const std::exception& e) {
    throw CacheError(std::string("zero cache spot-recheck failed: ") +
                         e.what(),
                     line);
  }
  if (!(std::fabs(z) < 1e-4)) {
    std::ostringstream msg;
    msg << "zero cache spot-recheck failed: |Z(" << real12(rec.ordinate)
        << ")| = " << real12(std::fabs(z)) << " >= 1e-4";
    throw CacheError(msg.str(), line);
  }
}

}  // namespace

void save_zero_cache(const ZeroCatalog& catalog, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw CacheError("cannot open zero cache for writing: " + path, 0);
  f << "# zrl-zeros v1 T=" << real12(catalog.height)
    << " step=" << real12(catalog.scan_step) << "\n";
  for (const auto& rec : catalog.zeros)
    f << rec.index << "\t" << real12(rec.ordinate) << "\n";
  if (!f) throw CacheError("write failed: " + path, 0);
}

ZeroCatalog load_zero_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheError("cannot open zero cache: " + path, 0);

  std::string header;
  if (!std::getline(f, header))
    throw CacheError("zero cache is empty: " + path, 1);
  ZeroCatalog catalog;
  int consumed = 0;
  if (std::sscanf(header.c_str(), "# zrl-zeros v1 T=%lf step=%lf%n",
                  &catalog.height, &catalog.scan_step,
                  &consumed) != 2 ||
      static_cast<std::size_t>(consumed) != header.size())
    throw CacheError("bad zero cache header: \"" + header + "\"", 1);

  std::string line;
  long line_no = 1;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) throw CacheError("blank record line", line_no);
    ZeroRecord rec;
    consumed = 0;
    if (std::sscanf(line.c_str(), "%d\t%lf%n", &rec.index, &rec.ordinate,
                    &consumed) != 2 ||
        static_cast<std::size_t>(consumed) != line.size())
      throw CacheError("bad zero cache record: \"" + line + "\"", line_no);
    if (rec.index != static_cast<int>(catalog.zeros.size()) + 1)
      throw CacheError("zero cache index out of sequence", line_no);
    if (!catalog.zeros.empty() &&
        !(rec.ordinate > catalog.zeros.back().ordinate))
      throw CacheError("zero cache ordinates not increasing", line_no);
    rec.bracket_lo = rec.ordinate - 1e-9;
    rec.bracket_hi = rec.ordinate + 1e-9;
    rec.tolerance = 1e-9;
    catalog.zeros.push_back(rec);
  }

  // first and last three records; all of them when six or fewer
  auto n = catalog.zeros.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 3 && i + 3 < n) continue;
    recheck_entry(catalog.zeros[i], static_cast<long>(i) + 2);
  }
  return catalog;
}

}  // namespace zrl
