#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dmwb/arrangement.hpp"
#include "dmwb/errors.hpp"
#include "dmwb/ext_order.hpp"
#include "dmwb/rational.hpp"

namespace dmwb {

/// A Deligne-Mostow lattice with 3-fold symmetry (mu1 = mu2 = mu3),
/// identified by (p,k), or with 2-fold symmetry (mu1 = mu2), identified by
/// (p,k,p').  Odd p is admitted (symmetry-quotient construction); branched
/// orders are then half-integers.
struct LatticeSpec {
  enum class Family { ThreeFold, TwoFold };

  Family family;
  int p;
  int k;
  int p_prime;  // only meaningful for TwoFold

  static LatticeSpec three_fold(int p, int k) {
    check_positive(p, k, 2);
    return {Family::ThreeFold, p, k, 0};
  }
  static LatticeSpec two_fold(int p, int k, int p_prime) {
    check_positive(p, k, p_prime);
    return {Family::TwoFold, p, k, p_prime};
  }

  bool is_three_fold() const { return family == Family::ThreeFold; }

  /// Parses "p,k" or "p,k,p'".
  static LatticeSpec parse(const std::string& text) {
    std::vector<int> vals;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
      try {
        vals.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw MalformedDataset("bad lattice parameter '" + tok + "'");
      }
    }
    if (vals.size() == 2) return three_fold(vals[0], vals[1]);
    if (vals.size() == 3) return two_fold(vals[0], vals[1], vals[2]);
    throw MalformedDataset("lattice must be p,k or p,k,p'");
  }

  std::string str() const {
    std::string s = "(" + std::to_string(p) + "," + std::to_string(k);
    if (!is_three_fold()) s += "," + std::to_string(p_prime);
    return s + ")";
  }

  friend bool operator==(const LatticeSpec& a, const LatticeSpec& b) {
    return a.family == b.family && a.p == b.p && a.k == b.k &&
           (a.is_three_fold() || a.p_prime == b.p_prime);
  }
  friend bool operator<(const LatticeSpec& a, const LatticeSpec& b) {
    auto ka = std::array{static_cast<int>(a.family), a.p, a.k, a.is_three_fold() ? 0 : a.p_prime};
    auto kb = std::array{static_cast<int>(b.family), b.p, b.k, b.is_three_fold() ? 0 : b.p_prime};
    return ka < kb;
  }

private:
  static void check_positive(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw Error("lattice parameters must be positive");
  }
};

/// The five cone-point weights.  sum(mu) == 2 holds for every spec by
/// construction; in_range records whether 0 < mu_i < 1 for all i.
struct MuVector {
  std::array<Rational, 5> mu;
  bool in_range;

  Rational sum() const {
    Rational s(0);
    for (const auto& m : mu) s += m;
    return s;
  }
};

inline MuVector mu_from_spec(const LatticeSpec& spec) {
  const Rational half(1, 2);
  const Rational p_inv(1, spec.p), k_inv(1, spec.k);
  std::array<Rational, 5> mu{};
  if (spec.is_three_fold()) {
    mu[0] = half + p_inv - k_inv;
    mu[1] = mu[2] = mu[3] = half - p_inv;
    mu[4] = Rational(2) * p_inv + k_inv;
  } else {
    const Rational pp_inv(1, spec.p_prime);
    mu[0] = half + pp_inv - k_inv;
    mu[1] = mu[2] = half - pp_inv;
    mu[3] = half + pp_inv - p_inv;
    mu[4] = p_inv + k_inv;
  }
  bool ok = true;
  for (const auto& m : mu) ok = ok && m > Rational(0) && m < Rational(1);
  return {mu, ok};
}

/// The auxiliary ramification parameters.  3-fold: 1/l = 1/2 - 1/p - 1/k and
/// 1/d = 1/2 - 3/p.  2-fold adds 1/k' = 1/p + 1/k - 2/p' and
/// 1/l' = 1/2 - 1/p' - 1/k, with 1/l = 1/2 + 1/p' - 1/p - 1/k and
/// 1/d = 1/2 - 1/p' - 1/p.  A vanishing reciprocal yields an infinite order.
struct DerivedParams {
  ExtOrder l;
  ExtOrder d;
  std::optional<ExtOrder> k_prime;  // 2-fold only
  std::optional<ExtOrder> l_prime;  // 2-fold only
};

inline DerivedParams derived_params(const LatticeSpec& spec) {
  const Rational half(1, 2);
  const Rational p_inv(1, spec.p), k_inv(1, spec.k);
  if (spec.is_three_fold()) {
    return {ExtOrder::from_reciprocal(half - p_inv - k_inv),
            ExtOrder::from_reciprocal(half - Rational(3) * p_inv),
            std::nullopt, std::nullopt};
  }
  const Rational pp_inv(1, spec.p_prime);
  return {ExtOrder::from_reciprocal(half + pp_inv - p_inv - k_inv),
          ExtOrder::from_reciprocal(half - pp_inv - p_inv),
          ExtOrder::from_reciprocal(p_inv + k_inv - Rational(2) * pp_inv),
          ExtOrder::from_reciprocal(half - pp_inv - k_inv)};
}

/// Branched and reflection orders for all ten divisors of the arrangement,
/// in canonical labels (the equal-weight cone points are mu1..mu3 for 3-fold
/// and mu1, mu2 for 2-fold).
///
/// Branched orders follow mu_a + mu_b = 1 - 1/n_ab applied to the line
/// divisors (with mu_* = mu4 for the blow-ups).  The reflection order doubles
/// the branched order exactly on the lines joining equal-weight cone points
/// (D12, D13, D23 for 3-fold; D12 for 2-fold), where the arrangement sees the
/// square of the lattice's reflection.
struct WeightAssignment {
  std::map<DivisorId, ExtOrder> branched;
  std::map<DivisorId, ExtOrder> reflection;
  DerivedParams derived;
};

/// Index pairs {a,b} with mu_a = mu_b as part of the spec's symmetry class.
inline std::vector<std::pair<int, int>> equal_mu_pairs(const LatticeSpec& spec) {
  if (spec.is_three_fold()) return {{1, 2}, {1, 3}, {2, 3}};
  return {{1, 2}};
}

/// Transpositions of the equal-mu indices, as permutations of {0,1,2,3}.
inline std::vector<std::array<int, 4>> symmetry_transpositions(const LatticeSpec& spec) {
  std::vector<std::array<int, 4>> out;
  for (auto [a, b] : equal_mu_pairs(spec)) {
    std::array<int, 4> sigma = {0, 1, 2, 3};
    std::swap(sigma[a], sigma[b]);
    out.push_back(sigma);
  }
  return out;
}

inline WeightAssignment weights_from_spec(const LatticeSpec& spec) {
  const MuVector mu = mu_from_spec(spec);
  WeightAssignment w{{}, {}, derived_params(spec)};
  for (DivisorId id : kAllDivisors) {
    Rational recip;
    if (is_proper_transform(id)) {
      auto [a, b] = line_indices(id);
      recip = Rational(1) - mu.mu[a] - mu.mu[b];
    } else {
      recip = Rational(1) - mu.mu[4] - mu.mu[exceptional_index(id)];
    }
    w.branched.emplace(id, ExtOrder::from_reciprocal(recip));
  }
  for (DivisorId id : kAllDivisors) {
    bool doubles = false;
    if (is_proper_transform(id)) {
      auto [a, b] = line_indices(id);
      for (auto [x, y] : equal_mu_pairs(spec)) doubles = doubles || (a == x && b == y);
    }
    const ExtOrder& n = w.branched.at(id);
    w.reflection.emplace(id, doubles ? n.doubled() : n);
  }
  return w;
}

/// Ramification order at a blow-up point where r = 3 lines meet, from
/// 2/m + sum(1/n_i) = r - 2.  A vanishing right-hand side yields an infinite
/// order, a negative one a negative order.
inline ExtOrder blowup_weight(const std::array<ExtOrder, 3>& line_orders) {
  Rational rhs(1);
  for (const ExtOrder& n : line_orders) rhs -= n.reciprocal();
  return ExtOrder::from_reciprocal(rhs / Rational(2));
}

// ---------------------------------------------------------------------------
// Embedded ramification table
// ---------------------------------------------------------------------------

/// Column order of the shipped table: n*0 n*1 n*2 n*3 n01 n02 n03 n12 n23 n13.
inline constexpr std::array<DivisorId, 10> kTableColumns = {
    DivisorId::E0,  DivisorId::E1,  DivisorId::E2,  DivisorId::E3,  DivisorId::D01,
    DivisorId::D02, DivisorId::D03, DivisorId::D12, DivisorId::D23, DivisorId::D13};

inline std::string table_column_name(int col) {
  static const char* names[] = {"n*0", "n*1", "n*2", "n*3", "n01",
                                "n02", "n03", "n12", "n23", "n13"};
  return names[col];
}

struct TableRow {
  LatticeSpec spec;
  std::array<ExtOrder, 10> weights;  // kTableColumns order

  const ExtOrder& at(DivisorId d) const {
    for (int c = 0; c < 10; ++c)
      if (kTableColumns[c] == d) return weights[c];
    throw Error("bad divisor");
  }
};

/// Parses the shipped table file (one row per lattice; '#' comments).
inline std::vector<TableRow> parse_table(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string family;
    if (!(ls >> family)) continue;
    int p = 0, k = 0, pp = 0;
    LatticeSpec spec = LatticeSpec::three_fold(2, 2);
    if (family == "3fold") {
      if (!(ls >> p >> k)) throw MalformedDataset("bad 3fold row: " + line);
      spec = LatticeSpec::three_fold(p, k);
    } else if (family == "2fold") {
      if (!(ls >> p >> k >> pp)) throw MalformedDataset("bad 2fold row: " + line);
      spec = LatticeSpec::two_fold(p, k, pp);
    } else {
      throw MalformedDataset("unknown family tag '" + family + "'");
    }
    std::vector<ExtOrder> ws;
    std::string tok;
    while (ls >> tok) ws.push_back(ExtOrder::parse(tok));
    if (ws.size() != 10) throw MalformedDataset("row needs 10 weights: " + line);
    rows.push_back({spec, {ws[0], ws[1], ws[2], ws[3], ws[4], ws[5], ws[6], ws[7], ws[8], ws[9]}});
  }
  return rows;
}

/// Identity on {0,1,2,3} and the fixed transposition (1 3) that reconciles
/// the canonical 2-fold labels with the table's columns.
inline constexpr std::array<int, 4> kIdentityPerm = {0, 1, 2, 3};
inline constexpr std::array<int, 4> kTwoFoldPerm = {0, 3, 2, 1};

struct TableMismatch {
  std::string column;
  ExtOrder expected;  // from the parameter formulas
  ExtOrder actual;    // table entry
};

struct RowValidation {
  LatticeSpec spec;
  std::string permutation;  // "identity" or "(1 3)"
  bool matched;
  std::vector<TableMismatch> mismatches;
};

struct ValidationReport {
  std::vector<RowValidation> rows;
  bool all_matched;
};

/// Replays every table row from its (p,k)/(p,k,p') parameters: 3-fold rows
/// under the identity labeling, 2-fold rows under (1 3).  Exact comparison;
/// mismatches are collected, never thrown.
inline ValidationReport validate_table(const std::vector<TableRow>& rows) {
  ValidationReport report{{}, true};
  for (const TableRow& row : rows) {
    const bool three = row.spec.is_three_fold();
    const std::array<int, 4>& sigma = three ? kIdentityPerm : kTwoFoldPerm;
    WeightAssignment w = weights_from_spec(row.spec);
    RowValidation rv{row.spec, three ? "identity" : "(1 3)", true, {}};
    for (int c = 0; c < 10; ++c) {
      DivisorId col = kTableColumns[c];
      ExtOrder expected = w.branched.at(permute_divisor(col, sigma));
      if (!(expected == row.weights[c])) {
        rv.matched = false;
        rv.mismatches.push_back({table_column_name(c), expected, row.weights[c]});
      }
    }
    report.all_matched = report.all_matched && rv.matched;
    report.rows.push_back(std::move(rv));
  }
  return report;
}

/// Eq.-indexBU consistency of a single row: for each blow-up column, the
/// weight recomputed from the three incident line columns must equal the
/// table entry.  Incidence is label-equivariant, so no permutation is needed.
inline bool blowup_round_trip(const TableRow& row, std::vector<TableMismatch>* out = nullptr) {
  bool ok = true;
  for (int b = 0; b < 4; ++b) {
    DivisorId eb = exceptional_divisor(b);
    std::array<DivisorId, 3> inc = incident_divisors(eb);
    ExtOrder m = blowup_weight({row.at(inc[0]), row.at(inc[1]), row.at(inc[2])});
    if (!(m == row.at(eb))) {
      ok = false;
      if (out) out->push_back({table_column_name(b), m, row.at(eb)});
    }
  }
  return ok;
}

} // namespace dmwb
