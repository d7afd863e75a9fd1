#pragma once

// Content-addressed store of computed series.
//
//   <dir>/objects/<sha256>.json   payload bytes, named by their hash
//   <dir>/entries/<sha256>.json   {"format_version", "key", "object"}
//
// An entry's name is the hash of its canonical key, so a lookup is a
// single file read.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pawn/serialize.hpp"

namespace pawn::cache {

inline constexpr int kFormatVersion = 1;

class HashMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes);

struct Key {
  std::string series;
  Json params;
  std::size_t order = 0;

  Json to_json() const;
};

struct EntryInfo {
  std::string entry_hash;
  std::string object_hash;
  int format_version = 0;
  Json key;
  std::uintmax_t bytes = 0;
};

class Store {
 public:
  /// Throws std::invalid_argument when dir is not an existing directory.
  explicit Store(std::filesystem::path dir);

  /// Payload for key, checked against its hash; throws HashMismatch on
  /// corruption.
  std::optional<std::string> load(const Key& key) const;
  void save(const Key& key, const std::string& payload) const;

  std::vector<EntryInfo> list() const;
  /// Removes entries with another format version and unreferenced
  /// objects; returns the number of files removed.
  std::size_t gc() const;
  /// Re-hashes every object and checks every entry's reference. Returns
  /// the problems found, one line each.
  std::vector<std::string> verify() const;

 private:
  std::filesystem::path entries_dir() const { return dir_ / "entries"; }
  std::filesystem::path objects_dir() const { return dir_ / "objects"; }
  std::filesystem::path dir_;
};

/// Directory from the flag, else $PAWN_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_dir(const std::string& flag);

}  // namespace pawn::cache
