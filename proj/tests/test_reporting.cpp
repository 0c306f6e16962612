#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "zrl/cli.hpp"
#include "zrl/emit.hpp"
#include "zrl/errors.hpp"
#include "zrl/zero_cache.hpp"
#include "zrl/zeta_engine.hpp"

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  REQUIRE(f.good());
  f << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() /
           ("zrl_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter.fetch_add(1)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

// Loading must reject this content; the error message must name the line.
void expect_cache_error(const std::string& content, const char* fragment) {
  TempDir dir;
  auto p = dir.path / "bad.txt";
  spit(p, content);
  try {
    zrl::load_zero_cache(p.string());
    FAIL("expected CacheError for: " << content);
  } catch (const zrl::CacheError& e) {
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("zero cache round trip preserves the catalog") {
  TempDir dir;
  auto first = dir.path / "z.txt";
  auto second = dir.path / "z2.txt";

  auto catalog = zrl::build_catalog(60.0, 0.1);
  REQUIRE(catalog.zeros.size() == 13);
  zrl::save_zero_cache(catalog, first.string());

  auto loaded = zrl::load_zero_cache(first.string());
  CHECK(loaded.height == catalog.height);
  CHECK(loaded.scan_step == catalog.scan_step);
  REQUIRE(loaded.zeros.size() == catalog.zeros.size());
  for (size_t i = 0; i < loaded.zeros.size(); ++i) {
    CHECK(loaded.zeros[i].index == catalog.zeros[i].index);
    // 12 significant digits survive the text round trip
    CHECK(loaded.zeros[i].ordinate ==
          doctest::Approx(catalog.zeros[i].ordinate).epsilon(1e-11));
    CHECK(loaded.zeros[i].bracket_lo ==
          doctest::Approx(loaded.zeros[i].ordinate - 1e-9));
    CHECK(loaded.zeros[i].bracket_hi ==
          doctest::Approx(loaded.zeros[i].ordinate + 1e-9));
  }

  // a second save of the loaded catalog must be byte-identical: %.12g is a
  // fixed point once the value has been through it
  zrl::save_zero_cache(loaded, second.string());
  CHECK(slurp(first) == slurp(second));
}

TEST_CASE("zero cache rejects corruption") {
  SUBCASE("ordinates out of order") {
    expect_cache_error(
        "# zrl-zeros v1 T=60 step=0.1\n"
        "1\t14.1347251423\n"
        "2\t25.0108575801\n"
        "3\t21.0220396388\n",
        "line 4");
  }
  SUBCASE("index sequence broken") {
    expect_cache_error(
        "# zrl-zeros v1 T=60 step=0.1\n"
        "1\t14.1347251423\n"
        "3\t21.0220396388\n",
        "line 3");
  }
  SUBCASE("ordinate that is not a zero fails the spot recheck") {
    // Z(14.9) is about 0.63, nowhere near a sign change
    expect_cache_error(
        "# zrl-zeros v1 T=60 step=0.1\n"
        "1\t14.9\n",
        "line 2");
  }
  SUBCASE("wrong magic") {
    expect_cache_error("# zr-zeros v1 T=60 step=0.1\n1\t14.1347251423\n",
                       "line 1");
  }
  SUBCASE("truncated header") {
    expect_cache_error("# zrl-zeros v1 T=60\n1\t14.1347251423\n", "line 1");
  }
  SUBCASE("garbage record") {
    expect_cache_error("# zrl-zeros v1 T=60 step=0.1\nx\t14.1\n", "line 2");
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(zrl::load_zero_cache("/nonexistent/zeros.txt"),
                    zrl::CacheError);
  }
}

TEST_CASE("emission is deterministic and headers survive empty tables") {
  auto catalog = zrl::build_catalog(30.0, 0.1);
  CHECK(zrl::to_csv(catalog) == zrl::to_csv(catalog));
  CHECK(zrl::json_text(zrl::to_json(catalog)) ==
        zrl::json_text(zrl::to_json(catalog)));

  std::vector<zrl::ChebyshevValue> empty;
  CHECK(zrl::to_csv(empty) == "x,theta,psi,pi_count\n");

  CHECK(zrl::format_real(0.1) == "0.1");
  CHECK(zrl::format_real(14.134725142270327) == "14.1347251423");
  CHECK(zrl::format_real(1e6) == "1000000");
  CHECK(zrl::format_real(999999.5) == "999999.5");
}

TEST_CASE("parse_args maps commands and validates ranges") {
  SUBCASE("zeros") {
    auto c = zrl::parse_args(
        {"zeros", "--height", "100", "--step", "0.1", "--cache", "z.txt"});
    CHECK(c.command == zrl::Command::Zeros);
    CHECK(c.height == 100.0);
    CHECK(c.step == 0.1);
    CHECK(c.cache_path == "z.txt");
    CHECK(c.echo == "zrl zeros --height 100 --step 0.1 --cache z.txt");
  }
  SUBCASE("verify with comma grids") {
    auto c = zrl::parse_args({"verify", "--check", "brun-titchmarsh",
                              "--x-max", "1000000", "--y-grid",
                              "20,100,1000"});
    CHECK(c.command == zrl::Command::Verify);
    CHECK(c.check == "brun-titchmarsh");
    CHECK(c.x_max == 1000000);
    REQUIRE(c.y_grid.size() == 3);
    CHECK(c.y_grid[1] == 100.0);
  }
  SUBCASE("no arguments means the self-check report") {
    auto c = zrl::parse_args({});
    CHECK(c.command == zrl::Command::Report);
    CHECK(c.format == zrl::OutputFormat::Csv);
    CHECK(c.strict == false);
    CHECK(c.echo == "zrl report");
  }
  SUBCASE("report flags") {
    auto c = zrl::parse_args({"report", "--strict", "--format", "json"});
    CHECK(c.strict == true);
    CHECK(c.format == zrl::OutputFormat::Json);
  }
  SUBCASE("out-of-range height names the flag") {
    try {
      zrl::parse_args({"zeros", "--height", "-5"});
      FAIL("expected UsageError");
    } catch (const zrl::UsageError& e) {
      CHECK(std::string(e.what()).find("--height") != std::string::npos);
    }
  }
  SUBCASE("unknown flag names itself") {
    try {
      zrl::parse_args({"psi", "--x", "5", "--frobnicate"});
      FAIL("expected UsageError");
    } catch (const zrl::UsageError& e) {
      CHECK(std::string(e.what()).find("--frobnicate") != std::string::npos);
    }
  }
  SUBCASE("truncation height above the abscissa is rejected") {
    CHECK_THROWS_AS(
        zrl::parse_args({"explicit", "--x", "500", "--height", "600"}),
        zrl::UsageError);
  }
  SUBCASE("help is not an error") {
    CHECK_THROWS_AS(zrl::parse_args({"--help"}), zrl::HelpRequested);
  }
}

TEST_CASE("cache paths honor ZRL_CACHE_DIR") {
  ::setenv("ZRL_CACHE_DIR", "/tmp/zrlcache", 1);
  CHECK(zrl::resolve_cache_path("z.txt") == "/tmp/zrlcache/z.txt");
  CHECK(zrl::resolve_cache_path("/abs/z.txt") == "/abs/z.txt");
  ::unsetenv("ZRL_CACHE_DIR");
  CHECK(zrl::resolve_cache_path("z.txt") == "z.txt");
}

TEST_CASE("run executes cheap commands end to end") {
  std::ostringstream out, err;

  SUBCASE("psi") {
    auto c = zrl::parse_args({"psi", "--x", "100"});
    CHECK(zrl::run(c, out, err) == 0);
    CHECK(out.str() == "x,theta,psi,pi_count\n"
                       "100,83.7283903991,94.0453112294,25\n");
  }
  SUBCASE("sieve") {
    auto c = zrl::parse_args({"sieve", "--lo", "10", "--hi", "30"});
    CHECK(zrl::run(c, out, err) == 0);
    CHECK(out.str() == "lo,hi,prime_count\n10,30,6\n");
  }
  SUBCASE("frontier") {
    auto c = zrl::parse_args(
        {"frontier", "--x-grid", "113", "--beta-grid", "0.5,1"});
    CHECK(zrl::run(c, out, err) == 0);
    CHECK(out.str() == "x,beta,has_prime\n"
                       "113,0.5,false\n"
                       "113,1,true\n");
  }
  SUBCASE("verify finds the documented gap and flags it") {
    auto c = zrl::parse_args(
        {"verify", "--check", "bhp", "--x-min", "2", "--x-max", "200"});
    CHECK(zrl::run(c, out, err) == 1);
    CHECK(out.str().find("bhp,126,") != std::string::npos);
  }
  SUBCASE("verify small-y violations do not flip the exit status") {
    auto c = zrl::parse_args({"verify", "--check", "brun-titchmarsh",
                              "--x-max", "50", "--y-grid", "10"});
    CHECK(zrl::run(c, out, err) == 0);
    CHECK(out.str().find("false") != std::string::npos);  // still reported
    CHECK(err.str().find("documented") != std::string::npos);
  }
  SUBCASE("output file") {
    TempDir dir;
    auto p = dir.path / "psi.csv";
    auto c = zrl::parse_args({"psi", "--x", "10", "--output", p.string()});
    CHECK(zrl::run(c, out, err) == 0);
    CHECK(out.str().empty());
    CHECK(slurp(p) == "x,theta,psi,pi_count\n10,5.34710753072,7.83201418051,4\n");
  }
}
