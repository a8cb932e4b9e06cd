#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmwb/errors.hpp"
#include "dmwb/ext_order.hpp"
#include "dmwb/projective.hpp"

namespace dmwb {

/// The ten divisors of the blown-up complete quadrilateral: six proper
/// transforms D_ab of the lines l_ab (z_a = z_b, with z_0 the zero form) and
/// four exceptional divisors E_b.  E_b sits over the triple point that lies
/// on all lines l_ag with a,g != b; concretely E1,E2,E3 lie over
/// [1:0:0],[0:1:0],[0:0:1] and E0 over [1:1:1].
enum class DivisorId { D01, D02, D03, D12, D13, D23, E0, E1, E2, E3 };

inline constexpr std::array<DivisorId, 10> kAllDivisors = {
    DivisorId::D01, DivisorId::D02, DivisorId::D03, DivisorId::D12, DivisorId::D13,
    DivisorId::D23, DivisorId::E0,  DivisorId::E1,  DivisorId::E2,  DivisorId::E3};

inline constexpr std::array<DivisorId, 6> kLineDivisors = {
    DivisorId::D01, DivisorId::D02, DivisorId::D03,
    DivisorId::D12, DivisorId::D13, DivisorId::D23};

inline constexpr std::array<DivisorId, 4> kExceptionalDivisors = {
    DivisorId::E0, DivisorId::E1, DivisorId::E2, DivisorId::E3};

inline bool is_proper_transform(DivisorId d) {
  return static_cast<int>(d) < 6;
}
inline bool is_exceptional(DivisorId d) { return !is_proper_transform(d); }

/// Index pair {a,b} of a proper transform D_ab.
inline std::pair<int, int> line_indices(DivisorId d) {
  switch (d) {
    case DivisorId::D01: return {0, 1};
    case DivisorId::D02: return {0, 2};
    case DivisorId::D03: return {0, 3};
    case DivisorId::D12: return {1, 2};
    case DivisorId::D13: return {1, 3};
    case DivisorId::D23: return {2, 3};
    default: throw Error("not a proper transform");
  }
}

/// Index b of an exceptional divisor E_b.
inline int exceptional_index(DivisorId d) {
  switch (d) {
    case DivisorId::E0: return 0;
    case DivisorId::E1: return 1;
    case DivisorId::E2: return 2;
    case DivisorId::E3: return 3;
    default: throw Error("not an exceptional divisor");
  }
}

inline DivisorId line_divisor(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 1) return DivisorId::D01;
  if (a == 0 && b == 2) return DivisorId::D02;
  if (a == 0 && b == 3) return DivisorId::D03;
  if (a == 1 && b == 2) return DivisorId::D12;
  if (a == 1 && b == 3) return DivisorId::D13;
  if (a == 2 && b == 3) return DivisorId::D23;
  throw Error("bad line indices");
}

inline DivisorId exceptional_divisor(int b) {
  switch (b) {
    case 0: return DivisorId::E0;
    case 1: return DivisorId::E1;
    case 2: return DivisorId::E2;
    case 3: return DivisorId::E3;
    default: throw Error("bad exceptional index");
  }
}

inline std::string divisor_name(DivisorId d) {
  static const char* names[] = {"D01", "D02", "D03", "D12", "D13",
                                "D23", "E0",  "E1",  "E2",  "E3"};
  return names[static_cast<int>(d)];
}

/// Relabels a divisor by a permutation sigma of the indices {0,1,2,3}.
inline DivisorId permute_divisor(DivisorId d, const std::array<int, 4>& sigma) {
  if (is_exceptional(d)) return exceptional_divisor(sigma[exceptional_index(d)]);
  auto [a, b] = line_indices(d);
  return line_divisor(sigma[a], sigma[b]);
}

/// Closed-form incidence on the blow-up: D_ab meets {E_g, E_d, D_gd} where
/// {g,d} is the complementary index pair, and E_b meets the three D_ag with
/// a,g != b.  build_quadrilateral() re-derives this from exact geometry; the
/// two must (and do) agree.
inline std::array<DivisorId, 3> incident_divisors(DivisorId d) {
  if (is_proper_transform(d)) {
    auto [a, b] = line_indices(d);
    std::array<int, 2> comp{};
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != a && i != b) comp[n++] = i;
    std::array<DivisorId, 3> out = {exceptional_divisor(comp[0]),
                                    exceptional_divisor(comp[1]),
                                    line_divisor(comp[0], comp[1])};
    std::sort(out.begin(), out.end());
    return out;
  }
  int b = exceptional_index(d);
  std::array<DivisorId, 3> out{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (i != b && j != b) out[n++] = line_divisor(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

/// Per-divisor data of the blown-up arrangement.
struct DivisorData {
  DivisorId id;
  int self_intersection;
  std::vector<DivisorId> incident;      // sorted
  std::optional<ProjLine> line;         // proper transforms
  std::optional<ProjPoint> center;      // exceptional divisors: blown-up point
};

/// The complete quadrilateral in P^2 together with its blow-up combinatorics.
struct BlownArrangement {
  std::array<ProjPoint, 4> base_points;  // p1, p2, p3, p4
  std::array<ProjLine, 6> base_lines;    // l01 .. l23 in DivisorId order
  std::vector<ProjPoint> triple_points;  // the four blown-up points
  std::vector<ProjPoint> double_points;  // the three remaining intersections
  std::map<DivisorId, DivisorData> divisors;

  const DivisorData& at(DivisorId d) const { return divisors.at(d); }
};

/// Builds the canonical arrangement z1 z2 z3 (z2-z1)(z3-z2)(z1-z3) = 0 from
/// the four base points, locating triple and double points by exact incidence.
inline BlownArrangement build_quadrilateral() {
  BlownArrangement arr{
      {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)},
      {ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1), ProjLine(1, -1, 0),
       ProjLine(1, 0, -1), ProjLine(0, 1, -1)},
      {},
      {},
      {}};

  // All pairwise line intersections, de-duplicated projectively, with the
  // number of lines through each.
  struct Node {
    ProjPoint pt;
    std::vector<int> lines;
  };
  std::vector<Node> nodes;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      ProjPoint x = meet(arr.base_lines[i], arr.base_lines[j]);
      auto it = std::find_if(nodes.begin(), nodes.end(),
                             [&](const Node& n) { return projectively_equal(n.pt, x); });
      if (it == nodes.end()) {
        nodes.push_back({x, {}});
        it = std::prev(nodes.end());
      }
      for (int l : {i, j})
        if (std::find(it->lines.begin(), it->lines.end(), l) == it->lines.end())
          it->lines.push_back(l);
    }
  }

  for (const Node& n : nodes) {
    if (n.lines.size() >= 3) arr.triple_points.push_back(n.pt);
    else arr.double_points.push_back(n.pt);
  }
  if (arr.triple_points.size() != 4 || arr.double_points.size() != 3)
    throw Error("unexpected intersection combinatorics");

  // Exceptional divisors: E_b over the triple point avoided by index b, i.e.
  // the base point p_b for b in {1,2,3} and p4 for b = 0.
  for (int b = 0; b < 4; ++b) {
    const ProjPoint& center = arr.base_points[b == 0 ? 3 : b - 1];
    DivisorData d{exceptional_divisor(b), -1, {}, std::nullopt, center};
    arr.divisors.emplace(d.id, std::move(d));
  }

  // Proper transforms: self-intersection 1 - (#blown-up points on the line).
  for (int i = 0; i < 6; ++i) {
    DivisorId id = kLineDivisors[i];
    const ProjLine& l = arr.base_lines[i];
    int blown = 0;
    for (const ProjPoint& t : arr.triple_points)
      if (incident(t, l)) ++blown;
    DivisorData d{id, 1 - blown, {}, l, std::nullopt};
    arr.divisors.emplace(id, std::move(d));
  }

  // Incidence on the blow-up, derived geometrically:
  //  - D meets E iff E's center lies on the line;
  //  - two proper transforms meet iff their intersection was not blown up;
  //  - exceptional divisors are disjoint from each other.
  auto is_triple = [&](const ProjPoint& x) {
    return std::any_of(arr.triple_points.begin(), arr.triple_points.end(),
                       [&](const ProjPoint& t) { return projectively_equal(t, x); });
  };
  for (DivisorId a : kAllDivisors) {
    for (DivisorId b : kAllDivisors) {
      if (a == b) continue;
      bool inc = false;
      const DivisorData& da = arr.at(a);
      const DivisorData& db = arr.at(b);
      if (da.line && db.line) {
        inc = !is_triple(meet(*da.line, *db.line));
      } else if (da.line && db.center) {
        inc = incident(*db.center, *da.line);
      } else if (da.center && db.line) {
        inc = incident(*da.center, *db.line);
      }
      if (inc) arr.divisors.at(a).incident.push_back(b);
    }
  }
  for (auto& [id, d] : arr.divisors) std::sort(d.incident.begin(), d.incident.end());
  return arr;
}

/// The 15 unordered incident pairs of the blown-up arrangement, each of which
/// is an orthogonal intersection of complex lines on the lattice side.
/// Deterministic order: lexicographic in (first, second) divisor ids.
inline std::vector<std::pair<DivisorId, DivisorId>> orthogonal_pairs(
    const BlownArrangement& arr) {
  std::vector<std::pair<DivisorId, DivisorId>> pairs;
  for (DivisorId a : kAllDivisors)
    for (DivisorId b : arr.at(a).incident)
      if (a < b) pairs.emplace_back(a, b);
  std::sort(pairs.begin(), pairs.end());
  if (pairs.size() != 15) throw Error("expected 15 orthogonal pairs");
  return pairs;
}

/// A branched cover of the blown-up arrangement: global degree plus the
/// ramification order along each divisor.
struct CoverSpec {
  long long degree = 1;
  std::map<DivisorId, ExtOrder> orders;
};

struct PreimageCount {
  Rational count;
  bool integral;  // false flags an inconsistent cover description
};

/// Number of preimages of a point lying on the divisors with the given
/// orders: N divided by their product.  Orders must be positive integers;
/// negative or infinite orders have no preimage count.
inline PreimageCount preimage_count(const CoverSpec& cover,
                                    const std::vector<ExtOrder>& locus_orders,
                                    int total_ramified) {
  if (cover.degree < 1) throw Error("cover degree must be >= 1");
  if (total_ramified < 0 || static_cast<std::size_t>(total_ramified) != locus_orders.size())
    throw std::invalid_argument("total_ramified must match the number of listed orders");
  Rational denom(1);
  for (const ExtOrder& n : locus_orders) {
    if (n.is_infinite() || n.is_negative())
      throw NonPositiveOrder("no preimage count along order " + n.str());
    denom *= n.value();
  }
  Rational count = Rational(cover.degree) / denom;
  return {count, is_integer(count)};
}

} // namespace dmwb
