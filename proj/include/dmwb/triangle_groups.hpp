#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dmwb/arrangement.hpp"
#include "dmwb/errors.hpp"
#include "dmwb/ext_order.hpp"
#include "dmwb/lattice_params.hpp"

namespace dmwb {

/// An unordered triple naming a triangle group Delta(a,b,c), stored sorted
/// ascending with infinity last.  A signature is valid when every entry is a
/// positive integer or infinity; stabilizer computations can produce invalid
/// entries (negative orders next to blown-down divisors), which are kept and
/// flagged rather than silently dropped.
struct TriangleSignature {
  enum class Flag { Plain, Doubled, ExtendedSymmetry };

  std::array<ExtOrder, 3> entries;
  Flag flag = Flag::Plain;

  bool valid() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ExtOrder& e) { return e.is_admissible_signature_entry(); });
  }
  bool contains_infinity() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const ExtOrder& e) { return e.is_infinite(); });
  }

  friend bool operator==(const TriangleSignature& a, const TriangleSignature& b) {
    return a.entries[0] == b.entries[0] && a.entries[1] == b.entries[1] &&
           a.entries[2] == b.entries[2];
  }
  friend bool operator!=(const TriangleSignature& a, const TriangleSignature& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s = "(" + entries[0].str() + "," + entries[1].str() + "," + entries[2].str() + ")";
    return s;
  }

  /// Sorted key for dataset lookups; valid signatures only.
  std::array<long long, 3> key() const {
    std::array<long long, 3> k{};
    for (int i = 0; i < 3; ++i)
      k[i] = entries[i].is_infinite() ? std::numeric_limits<long long>::max()
                                      : entries[i].value().numerator();
    return k;
  }
};

namespace detail {
inline TriangleSignature make_signature(std::array<ExtOrder, 3> e, TriangleSignature::Flag f) {
  std::sort(e.begin(), e.end(), [](const ExtOrder& a, const ExtOrder& b) { return a < b; });
  return {e, f};
}
} // namespace detail

/// Sorts a triple into a signature; rejects anything that is not a positive
/// integer or infinity.
inline TriangleSignature normalize(const ExtOrder& a, const ExtOrder& b, const ExtOrder& c) {
  for (const ExtOrder& e : {a, b, c})
    if (!e.is_admissible_signature_entry())
      throw InvalidSignature("signature entry " + e.str() + " is not a positive integer or inf");
  return detail::make_signature({a, b, c}, TriangleSignature::Flag::Plain);
}

inline TriangleSignature normalize(long long a, long long b, long long c) {
  return normalize(ExtOrder::of(a), ExtOrder::of(b), ExtOrder::of(c));
}

/// 1/a + 1/b + 1/c < 1, exactly (1/inf = 0).
inline bool is_hyperbolic(const TriangleSignature& sig) {
  if (!sig.valid()) throw InvalidSignature("hyperbolicity is defined for valid signatures");
  Rational s(0);
  for (const ExtOrder& e : sig.entries) s += e.reciprocal();
  return s < Rational(1);
}

/// Stabilizer triangle group of an arrangement divisor.
///
/// The three incident divisors contribute their reflection orders.  When a
/// transposition of the equal-mu indices stabilizes the divisor and swaps two
/// of its neighbours, the triangle has two equal angles and halves: the
/// swapped pair contributes the 2 and its common order, the fixed neighbour
/// its reflection order (flag Doubled).  A stabilizing symmetry group larger
/// than a single transposition (E0 in the 3-fold case) fixes all neighbours;
/// the plain triple is returned flagged ExtendedSymmetry.  Blown-down
/// divisors (negative branched order) have no line stabilizer.
inline TriangleSignature stabilizer(DivisorId divisor, const LatticeSpec& spec) {
  const WeightAssignment w = weights_from_spec(spec);
  if (w.branched.at(divisor).is_negative())
    throw CollapsedDivisor(divisor_name(divisor) + " is blown down for " + spec.str());

  const std::array<DivisorId, 3> inc = incident_divisors(divisor);
  std::vector<std::array<int, 4>> stabilizing;
  for (const auto& sigma : symmetry_transpositions(spec))
    if (permute_divisor(divisor, sigma) == divisor) stabilizing.push_back(sigma);

  if (stabilizing.size() == 1) {
    const auto& sigma = stabilizing.front();
    // Does the transposition swap two neighbours?
    std::optional<std::pair<DivisorId, DivisorId>> swapped;
    DivisorId fixed = inc[0];
    for (DivisorId n : inc) {
      DivisorId image = permute_divisor(n, sigma);
      if (image != n) swapped = std::minmax(n, image);
      else fixed = n;
    }
    if (swapped) {
      return detail::make_signature({ExtOrder::of(2), w.reflection.at(swapped->first),
                                     w.reflection.at(fixed)},
                                    TriangleSignature::Flag::Doubled);
    }
  }

  auto flag = stabilizing.size() > 1 ? TriangleSignature::Flag::ExtendedSymmetry
                                     : TriangleSignature::Flag::Plain;
  return detail::make_signature(
      {w.reflection.at(inc[0]), w.reflection.at(inc[1]), w.reflection.at(inc[2])}, flag);
}

// ---------------------------------------------------------------------------
// Arithmeticity / commensurability classification
// ---------------------------------------------------------------------------

struct ArithmeticClassEntry {
  TriangleSignature signature;
  int class_id;
};

/// The classification dataset: every arithmetic hyperbolic triangle group
/// with its commensurability class.  Loaded once, read-only.
class ArithmeticClassTable {
public:
  std::optional<int> lookup(const TriangleSignature& sig) const {
    if (!sig.valid()) return std::nullopt;
    auto it = classes_.find(sig.key());
    if (it == classes_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return classes_.size(); }

  std::vector<ArithmeticClassEntry> entries() const {
    std::vector<ArithmeticClassEntry> out;
    for (const auto& [key, cls] : classes_) {
      auto decode = [](long long v) {
        return v == std::numeric_limits<long long>::max() ? ExtOrder::infinity()
                                                          : ExtOrder::of(v);
      };
      out.push_back({normalize(decode(key[0]), decode(key[1]), decode(key[2])), cls});
    }
    return out;
  }

  static ArithmeticClassTable parse(std::istream& in) {
    ArithmeticClassTable table;
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string a, b, c;
      int cls = 0;
      if (!(ls >> a)) continue;
      if (!(ls >> b >> c >> cls)) throw MalformedDataset("bad class row: " + line);
      TriangleSignature sig = normalize(ExtOrder::parse(a), ExtOrder::parse(b), ExtOrder::parse(c));
      if (!table.classes_.emplace(sig.key(), cls).second)
        throw MalformedDataset("duplicate signature: " + line);
    }
    return table;
  }

private:
  std::map<std::array<long long, 3>, int> classes_;
};

struct ArithmeticVerdict {
  bool arithmetic;
  std::optional<int> class_id;
};

/// Dataset membership decides arithmeticity; hyperbolic signatures only.
inline ArithmeticVerdict classify_arithmetic(const ArithmeticClassTable& table,
                                             const TriangleSignature& sig) {
  if (!sig.valid() || !is_hyperbolic(sig))
    throw NotHyperbolic("classification needs a hyperbolic signature, got " + sig.str());
  auto cls = table.lookup(sig);
  return {cls.has_value(), cls};
}

/// Commensurability = equality of class ids; defined for arithmetic
/// signatures only (the dataset carries no classes beyond them).
inline bool commensurable(const ArithmeticClassTable& table, const TriangleSignature& s1,
                          const TriangleSignature& s2) {
  auto c1 = classify_arithmetic(table, s1);
  auto c2 = classify_arithmetic(table, s2);
  if (!c1.arithmetic || !c2.arithmetic)
    throw Unclassified("commensurability beyond the arithmetic classes is not tracked");
  return *c1.class_id == *c2.class_id;
}

} // namespace dmwb
