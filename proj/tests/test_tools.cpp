#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "cache.hpp"
#include "doctest.h"
#include "printed_values.hpp"
#include "pawn/series.hpp"
#include "render.hpp"

using namespace pawn;
using printed::poly;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("pawn-cache-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("sha256 of known strings") {
  CHECK(cache::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cache::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache stores and reloads payloads") {
  TempDir dir;
  const cache::Store store(dir.path);
  const cache::Key key{"E", Json::object(), 4};
  CHECK_FALSE(store.load(key).has_value());
  const std::string payload = series_to_json(series_E(4), "E", Json::object()).dump();
  store.save(key, payload);
  REQUIRE(store.load(key).has_value());
  CHECK(*store.load(key) == payload);
  CHECK_FALSE(store.load(cache::Key{"E", Json::object(), 5}).has_value());
  CHECK_FALSE(store.load(cache::Key{"F", Json{{"n", 2}}, 4}).has_value());

  const auto entries = store.list();
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].object_hash == cache::sha256_hex(payload));
  CHECK(entries[0].format_version == cache::kFormatVersion);
  CHECK(entries[0].key["series"] == "E");
  CHECK(store.verify().empty());
  CHECK(series_from_json<QRat>(Json::parse(*store.load(key))) == series_E(4));
}

TEST_CASE("corrupted objects are detected") {
  TempDir dir;
  const cache::Store store(dir.path);
  const cache::Key key{"omega", Json::object(), 4};
  const std::string payload = series_to_json(solve_omega(4), "omega", Json::object()).dump();
  store.save(key, payload);
  const fs::path object = dir.path / "objects" / (cache::sha256_hex(payload) + ".json");
  REQUIRE(fs::exists(object));
  std::ofstream(object, std::ios::binary | std::ios::trunc) << payload.substr(0, payload.size() - 1) << " ";
  CHECK_THROWS_AS(store.load(key), cache::HashMismatch);
  CHECK(store.verify().size() == 1);
}

TEST_CASE("a dangling entry is reported and collected") {
  TempDir dir;
  const cache::Store store(dir.path);
  const std::string payload = "{}";
  store.save(cache::Key{"E", Json::object(), 1}, payload);
  fs::remove(dir.path / "objects" / (cache::sha256_hex(payload) + ".json"));
  CHECK(store.verify().size() == 1);
  CHECK_THROWS(store.load(cache::Key{"E", Json::object(), 1}));
}

TEST_CASE("gc drops unreferenced objects and stale versions") {
  TempDir dir;
  const cache::Store store(dir.path);
  store.save(cache::Key{"E", Json::object(), 2}, "a");
  store.save(cache::Key{"E", Json::object(), 3}, "b");
  std::ofstream(dir.path / "objects" / (cache::sha256_hex("orphan") + ".json")) << "orphan";
  CHECK(store.gc() == 1);
  CHECK(store.list().size() == 2);

  for (const auto& e : fs::directory_iterator(dir.path / "entries")) {
    Json j = Json::parse(slurp(e.path()));
    if (j["key"]["order"] == 2) {
      j["format_version"] = cache::kFormatVersion + 1;
      std::ofstream(e.path(), std::ios::trunc) << j.dump();
    }
  }
  CHECK(store.gc() == 2);
  REQUIRE(store.list().size() == 1);
  CHECK(store.list()[0].key["order"] == 3);
  CHECK(store.verify().empty());
}

TEST_CASE("cache directory resolution") {
  CHECK_THROWS_AS(cache::Store(fs::path("/nonexistent/pawn/cache")), std::invalid_argument);
  CHECK(cache::resolve_dir("/x") == fs::path("/x"));
  ::setenv("PAWN_CACHE_DIR", "/from/env", 1);
  CHECK(cache::resolve_dir("") == fs::path("/from/env"));
  ::unsetenv("PAWN_CACHE_DIR");
  CHECK_FALSE(cache::resolve_dir("").has_value());
}

TEST_CASE("tex rendering") {
  CHECK(render::tex(QPoly{1, 0, 2}) == "1 + 2 q^{2}");
  CHECK(render::tex(QPoly{0, -1}) == "-q");
  CHECK(render::tex(QPoly()) == "0");
  CHECK(render::tex(QRat(1) / poly({1, 1})) == "\\frac{1}{\\Phi_{2}}");
  CHECK(render::tex(QRat(Rational(1) / Rational(2))) == "\\frac{1}{2}");
  const std::string pawn3 = render::tex(pawn_coefficient(Tree::parse("((()))")));
  CHECK(pawn3 ==
        "\\frac{(1 + q x)(1 + q + q^{2} x)(1 + q + q^{2} + q^{3} x)}{\\Phi_{2}\\Phi_{3}}");
}

TEST_CASE("csv fields are quoted when needed") {
  CHECK(render::csv_field("q + 1") == "q + 1");
  CHECK(render::csv_field("a,b") == "\"a,b\"");
  CHECK(render::csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  CHECK(render::plain(QRat(1) / poly({1, 1})) == "(1)/(q + 1)");
}
