#include "cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace pawn::cache {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes through a temporary name so readers never see a partial file.
void write_file(const fs::path& p, const std::string& bytes) {
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << bytes;
  }
  fs::rename(tmp, p);
}

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

Json Key::to_json() const {
  return Json{{"series", series}, {"params", params.is_null() ? Json::object() : params}, {"order", order}};
}

Store::Store(fs::path dir) : dir_(std::move(dir)) {
  if (!fs::is_directory(dir_)) throw std::invalid_argument("cache directory does not exist: " + dir_.string());
}

std::optional<std::string> Store::load(const Key& key) const {
  const Json k = key.to_json();
  const fs::path entry = entries_dir() / (sha256_hex(k.dump()) + ".json");
  if (!fs::exists(entry)) return std::nullopt;
  const Json e = Json::parse(read_file(entry));
  if (e.value("format_version", 0) != kFormatVersion || e.at("key") != k) return std::nullopt;
  const std::string object = e.at("object").get<std::string>();
  const fs::path path = objects_dir() / (object + ".json");
  if (!fs::exists(path)) throw HashMismatch("cache entry refers to missing object " + object);
  std::string payload = read_file(path);
  if (sha256_hex(payload) != object) throw HashMismatch("cache object " + object + " does not match its hash");
  return payload;
}

void Store::save(const Key& key, const std::string& payload) const {
  fs::create_directories(entries_dir());
  fs::create_directories(objects_dir());
  const std::string object = sha256_hex(payload);
  const fs::path path = objects_dir() / (object + ".json");
  if (!fs::exists(path)) write_file(path, payload);
  const Json k = key.to_json();
  const Json e{{"format_version", kFormatVersion}, {"key", k}, {"object", object}};
  write_file(entries_dir() / (sha256_hex(k.dump()) + ".json"), e.dump() + "\n");
}

std::vector<EntryInfo> Store::list() const {
  std::vector<EntryInfo> out;
  for (const auto& p : json_files(entries_dir())) {
    EntryInfo info;
    info.entry_hash = p.stem().string();
    try {
      const Json e = Json::parse(read_file(p));
      info.format_version = e.value("format_version", 0);
      info.key = e.value("key", Json());
      info.object_hash = e.value("object", std::string());
      const fs::path obj = objects_dir() / (info.object_hash + ".json");
      if (fs::exists(obj)) info.bytes = fs::file_size(obj);
    } catch (const Json::exception&) {
      info.format_version = -1;
    }
    out.push_back(std::move(info));
  }
  return out;
}

std::size_t Store::gc() const {
  std::size_t removed = 0;
  std::set<std::string> live;
  for (const auto& info : list()) {
    if (info.format_version != kFormatVersion) {
      fs::remove(entries_dir() / (info.entry_hash + ".json"));
      ++removed;
    } else {
      live.insert(info.object_hash);
    }
  }
  for (const auto& p : json_files(objects_dir()))
    if (!live.count(p.stem().string())) {
      fs::remove(p);
      ++removed;
    }
  return removed;
}

std::vector<std::string> Store::verify() const {
  std::vector<std::string> problems;
  for (const auto& p : json_files(objects_dir()))
    if (sha256_hex(read_file(p)) != p.stem().string()) problems.push_back("object " + p.stem().string() + ": hash mismatch");
  for (const auto& info : list()) {
    if (info.format_version == -1) {
      problems.push_back("entry " + info.entry_hash + ": unreadable");
      continue;
    }
    if (sha256_hex(info.key.dump()) != info.entry_hash) problems.push_back("entry " + info.entry_hash + ": key hash mismatch");
    if (!fs::exists(objects_dir() / (info.object_hash + ".json")))
      problems.push_back("entry " + info.entry_hash + ": missing object " + info.object_hash);
  }
  return problems;
}

std::optional<fs::path> resolve_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("PAWN_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace pawn::cache
