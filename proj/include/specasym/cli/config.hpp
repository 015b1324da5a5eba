#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace specasym {

// Flat key=value experiment configuration. Lines starting with '#' are
// comments; later assignments override earlier ones.
class ExperimentConfig {
 public:
  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  // "key=value"; throws ValidationError on a malformed override.
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

  // Canonical text (sorted key=value lines) and its FNV-1a 64-bit hash.
  std::string canonical() const;
  std::string hash() const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

std::vector<double> parse_list(const std::string& text);

// Output directory: the "out" key, else $SPECASYM_OUT, else "out".
std::string output_directory(const ExperimentConfig& config);

}  // namespace specasym
