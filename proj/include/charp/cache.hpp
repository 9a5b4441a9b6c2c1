#pragma once

#include "charp/serialize.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace charp {

/// On-disk result cache: one JSON-lines file per (prime, polynomial), each
/// line {"v", "key", "value"}. Files only ever grow; a new entry is written
/// by copying the file to a temporary, appending, and renaming over the
/// original, so readers never see a torn line. Lines with another version
/// tag are ignored.
class ResultCache {
 public:
  static constexpr int kVersion = 1;

  explicit ResultCache(std::filesystem::path dir);

  /// Stable 64-bit FNV-1a fingerprint, printed as 16 hex digits.
  static std::string fingerprint(std::string_view text);

  std::optional<Json> lookup(const Ring& ring, const Polynomial& f, const std::string& key) const;
  void store(const Ring& ring, const Polynomial& f, const std::string& key, const Json& value) const;

  std::filesystem::path file_for(const Ring& ring, const Polynomial& f) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Whether a cache hit is re-derived and compared: a fixed 1-in-20 slice of
/// keys, chosen by fingerprint so reruns audit the same entries.
bool audit_selected(const std::string& file_key, const std::string& key);

/// Compares two reports, ideals by ideal_equal (parsed back into ring) and
/// everything else literally.
bool reports_agree(const Ring& ring, const Json& a, const Json& b);

}  // namespace charp
