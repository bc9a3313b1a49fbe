#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "deltafn/cache.hpp"
#include "doctest.h"

using namespace deltafn;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("deltafn_cache_test_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& f) {
  std::ifstream in(f);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cache round trip") {
  TempDir dir;
  CHECK(check_cache(dir.path, 2, 3).state == CacheState::Missing);
  {
    Catalog cat;
    auto& ctx = cat.gl(3, 2);
    CHECK(write_cache(ctx, dir.path));
    CHECK_FALSE(write_cache(ctx, dir.path));
  }
  const auto st = check_cache(dir.path, 2, 3);
  CHECK(st.state == CacheState::Valid);
  CHECK(st.has_pims);
  for (const char* f : {"monoid.json", "simples.json", "pims.json"}) CHECK(fs::exists(cache_path(dir.path, 2, 3) / f));

  Catalog fresh;
  Catalog built;
  auto& a = fresh.gl(3, 2);
  load_cache(a, dir.path);
  CHECK(a.has_simples());
  CHECK(a.has_pims());
  auto& b = built.gl(3, 2);
  REQUIRE(a.simples().size() == b.simples().size());
  for (std::size_t i = 0; i < a.simples().size(); ++i) {
    CHECK(a.simples().name(i) == b.simples().name(i));
    CHECK(a.simples().simple(i).dim() == b.simples().simple(i).dim());
    CHECK(a.pims().pim(i).dim() == b.pims().pim(i).dim());
  }
  CHECK(a.pims().cartan() == b.pims().cartan());
}

TEST_CASE("corrupt and missing caches are rejected") {
  TempDir dir;
  Catalog cat;
  write_cache(cat.gl(2, 2), dir.path);
  const fs::path f = cache_path(dir.path, 2, 2) / "simples.json";
  std::string text = slurp(f);
  const auto pos = text.find("\"data\"");
  REQUIRE(pos != std::string::npos);
  // flip one digit inside the payload
  auto digit = text.find_first_of("01", pos);
  REQUIRE(digit != std::string::npos);
  text[digit] = text[digit] == '0' ? '1' : '0';
  std::ofstream(f) << text;
  CHECK(check_cache(dir.path, 2, 2).state == CacheState::Corrupt);
  Catalog other;
  CHECK_THROWS_AS(load_cache(other.gl(2, 2), dir.path), CacheError);
  std::ofstream(f) << "{ not json";
  CHECK(check_cache(dir.path, 2, 2).state == CacheState::Corrupt);
  Catalog third;
  CHECK_THROWS_AS(load_cache(third.gl(2, 3), dir.path), CacheError);
}

TEST_CASE("cache directory override") {
  ::setenv(kCacheDirEnv, "/tmp/deltafn_elsewhere", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/deltafn_elsewhere"));
  ::unsetenv(kCacheDirEnv);
  CHECK(default_cache_dir() == fs::path("cache"));
  CHECK(cache_path("root", 3, 2) == fs::path("root") / "3" / "2");
}
