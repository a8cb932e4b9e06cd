#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dmwb/errors.hpp"
#include "dmwb/ext_order.hpp"
#include "dmwb/mat3.hpp"

namespace dmwb {

/// Named generator matrices supplied by the user (JSON: name -> 3x3 array of
/// [re, im] pairs, optional "tolerance" key).  Matrices are opaque data; the
/// library only verifies properties of them.
struct MatrixFixture {
  std::map<std::string, Mat3> generators;
  double tolerance = 1e-9;

  bool has(const std::string& name) const { return generators.count(name) > 0; }

  const Mat3& at(const std::string& name) const {
    auto it = generators.find(name);
    if (it == generators.end()) throw UnknownGenerator("no generator named '" + name + "'");
    return it->second;
  }

  static MatrixFixture parse(std::istream& in) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw MalformedDataset(std::string("bad fixture JSON: ") + e.what());
    }
    MatrixFixture fx;
    if (!j.is_object()) throw MalformedDataset("fixture must be a JSON object");
    for (auto& [key, value] : j.items()) {
      if (key == "tolerance") {
        fx.tolerance = value.get<double>();
        if (fx.tolerance <= 0.0) throw MalformedDataset("tolerance must be positive");
        continue;
      }
      if (!value.is_array() || value.size() != 3)
        throw MalformedDataset("generator '" + key + "' must be a 3x3 matrix");
      Mat3 m;
      for (int r = 0; r < 3; ++r) {
        if (!value[r].is_array() || value[r].size() != 3)
          throw MalformedDataset("generator '" + key + "' must be a 3x3 matrix");
        for (int c = 0; c < 3; ++c) {
          const auto& cell = value[r][c];
          if (cell.is_number()) {
            m.a[r][c] = Complex(cell.get<double>(), 0.0);
          } else if (cell.is_array() && cell.size() == 2) {
            m.a[r][c] = Complex(cell[0].get<double>(), cell[1].get<double>());
          } else {
            throw MalformedDataset("entry of '" + key + "' must be a number or [re, im]");
          }
        }
      }
      inverse(m);  // invertibility is a fixture invariant
      fx.generators.emplace(key, m);
    }
    return fx;
  }

  static MatrixFixture load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedDataset("cannot open fixture: " + path);
    return parse(in);
  }
};

/// Splits a generator word like "R0 B2 R0^-1" (separators: whitespace, '*',
/// or a UTF-8 middle dot) into (name, exponent) factors.
inline std::vector<std::pair<std::string, int>> parse_generator_word(const std::string& text) {
  std::string cleaned;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      cleaned += ' ';
      ++i;
    } else if (c == '*' || c == ',') {
      cleaned += ' ';
    } else {
      cleaned += static_cast<char>(c);
    }
  }
  std::vector<std::pair<std::string, int>> factors;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error("bad exponent in '" + tok + "'");
      }
      tok.erase(caret);
    }
    if (tok.empty()) throw Error("empty generator name in word");
    factors.emplace_back(tok, exp);
  }
  return factors;
}

/// Evaluates a generator word over a fixture.
inline Mat3 evaluate_word(const MatrixFixture& fx, const std::string& text) {
  Mat3 out = Mat3::identity();
  for (const auto& [name, exp] : parse_generator_word(text)) {
    const Mat3& g = fx.at(name);
    Mat3 factor = exp < 0 ? inverse(g) : g;
    for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) out = out * factor;
  }
  return out;
}

/// Checks lhs = rhs projectively (up to a global scalar) within the fixture
/// tolerance.
inline bool verify_word_identity(const MatrixFixture& fx, const std::string& lhs,
                                 const std::string& rhs) {
  return projectively_equal(evaluate_word(fx, lhs), evaluate_word(fx, rhs), fx.tolerance);
}

} // namespace dmwb
