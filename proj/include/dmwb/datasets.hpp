#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dmwb/errors.hpp"
#include "dmwb/lattice_params.hpp"

#ifndef DMWB_DEFAULT_DATA_DIR
#define DMWB_DEFAULT_DATA_DIR "data"
#endif

namespace dmwb {

/// Directory holding the shipped datasets.  DMWB_DATA_DIR overrides the
/// compiled-in default.
inline std::string data_dir() {
  if (const char* env = std::getenv("DMWB_DATA_DIR")) return env;
  return DMWB_DEFAULT_DATA_DIR;
}

inline std::string table_path() { return data_dir() + "/dm_table.txt"; }
inline std::string triangle_classes_path() { return data_dir() + "/triangle_classes.txt"; }
inline std::string lattice_flags_path() { return data_dir() + "/lattice_flags.txt"; }

inline std::ifstream open_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedDataset("cannot open dataset: " + path);
  return in;
}

inline std::vector<TableRow> load_table(const std::string& path = table_path()) {
  auto in = open_dataset(path);
  return parse_table(in);
}

enum class LatticeFlag { Arithmetic, NonArithmetic, Unasserted };

inline std::string flag_name(LatticeFlag f) {
  switch (f) {
    case LatticeFlag::Arithmetic: return "arithmetic";
    case LatticeFlag::NonArithmetic: return "nonarithmetic";
    default: return "unasserted";
  }
}

class LatticeFlags {
public:
  LatticeFlag at(const LatticeSpec& spec) const {
    auto it = flags_.find(spec);
    return it == flags_.end() ? LatticeFlag::Unasserted : it->second;
  }
  std::size_t size() const { return flags_.size(); }

  static LatticeFlags parse(std::istream& in) {
    LatticeFlags out;
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string family;
      if (!(ls >> family)) continue;
      int p = 0, k = 0, pp = 0;
      LatticeSpec spec = LatticeSpec::three_fold(2, 2);
      if (family == "3fold" && (ls >> p >> k)) {
        spec = LatticeSpec::three_fold(p, k);
      } else if (family == "2fold" && (ls >> p >> k >> pp)) {
        spec = LatticeSpec::two_fold(p, k, pp);
      } else {
        throw MalformedDataset("bad flag row: " + line);
      }
      std::string flag;
      if (!(ls >> flag)) throw MalformedDataset("missing flag: " + line);
      if (flag == "arithmetic") out.flags_[spec] = LatticeFlag::Arithmetic;
      else if (flag == "nonarithmetic") out.flags_[spec] = LatticeFlag::NonArithmetic;
      else if (flag == "unasserted") out.flags_[spec] = LatticeFlag::Unasserted;
      else throw MalformedDataset("unknown flag '" + flag + "'");
    }
    return out;
  }

  static LatticeFlags load(const std::string& path = lattice_flags_path()) {
    auto in = open_dataset(path);
    return parse(in);
  }

private:
  std::map<LatticeSpec, LatticeFlag> flags_;
};

/// FNV-1a 64-bit digest, used to pin the shipped dataset bytes in tests.
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedDataset("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a(ss.str());
}

} // namespace dmwb
