#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dmwb/errors.hpp"
#include "dmwb/ext_order.hpp"
#include "dmwb/lattice_params.hpp"
#include "dmwb/matrix_fixture.hpp"
#include "dmwb/rational.hpp"
#include "dmwb/words.hpp"

namespace dmwb {

/// Orbifold fundamental group of a sphere with four cone points:
/// <a1..a4 | a_i^{m_i} (finite m_i), a1 a2 a3 a4>.  Orders are positive
/// integers or infinity (an infinite order drops the torsion relation).
struct OrbifoldGroup {
  std::array<ExtOrder, 4> orders;

  static OrbifoldGroup with_orders(std::array<ExtOrder, 4> orders) {
    for (const ExtOrder& m : orders)
      if (!m.is_admissible_signature_entry())
        throw Error("cone order " + m.str() + " is not a positive integer or inf");
    return {orders};
  }

  Word product_relator() const { return word({1, 2, 3, 4}); }

  std::vector<Word> torsion_relators() const {
    std::vector<Word> out;
    for (int i = 0; i < 4; ++i)
      if (!orders[i].is_infinite())
        out.push_back(power(word({i + 1}), static_cast<int>(orders[i].value().numerator())));
    return out;
  }
};

/// Fibre orbifold group of the Lefschetz fibration for a given lattice: cone
/// orders are the branched weights at the four blow-up divisors, in the
/// canonical marked-point order (E1, E2, E3, E0).
inline OrbifoldGroup fiber_orbifold_group(const LatticeSpec& spec) {
  const WeightAssignment w = weights_from_spec(spec);
  std::array<ExtOrder, 4> orders = {w.branched.at(DivisorId::E1), w.branched.at(DivisorId::E2),
                                    w.branched.at(DivisorId::E3), w.branched.at(DivisorId::E0)};
  for (const ExtOrder& m : orders) {
    if (m.is_negative())
      throw CollapsedFiberPoint("blow-up weight " + m.str() + " collapses a marked point of " +
                                spec.str());
    if (!m.is_admissible_signature_entry())
      throw Error("blow-up weight " + m.str() + " of " + spec.str() + " is not integral");
  }
  return OrbifoldGroup::with_orders(orders);
}

/// An element of the mapping class group, as images of the four generators.
struct MappingClass {
  std::array<Word, 4> images;

  static MappingClass identity() {
    return {{word({1}), word({2}), word({3}), word({4})}};
  }
};

/// Substitutes generator images into a word and freely reduces.
inline Word apply(const MappingClass& mc, const Word& w) {
  std::vector<int> out;
  for (int l : w.letters) {
    const Word& img = l > 0 ? mc.images[l - 1] : inverse(mc.images[-l - 1]);
    out.insert(out.end(), img.letters.begin(), img.letters.end());
  }
  return free_reduce(out);
}

/// compose(f, g) acts as f after g.
inline MappingClass compose(const MappingClass& f, const MappingClass& g) {
  MappingClass out;
  for (int i = 0; i < 4; ++i) out.images[i] = apply(f, g.images[i]);
  return out;
}

/// The standard half twist swapping marked points i and i+1 (i = 1, 2, 3):
/// a_i -> a_i a_{i+1} a_i^-1, a_{i+1} -> a_i.  These are the default images
/// of the three loop generators of the thrice-punctured base; they are
/// configuration data, replaceable by any valid MappingClass.
inline MappingClass half_twist(int i) {
  if (i < 1 || i > 3) throw Error("half twists are sigma_1, sigma_2, sigma_3");
  MappingClass mc = MappingClass::identity();
  mc.images[i - 1] = word({i, i + 1, -i});
  mc.images[i] = word({i});
  return mc;
}

inline MappingClass half_twist_inverse(int i) {
  if (i < 1 || i > 3) throw Error("half twists are sigma_1, sigma_2, sigma_3");
  MappingClass mc = MappingClass::identity();
  mc.images[i - 1] = word({i + 1});
  mc.images[i] = word({-(i + 1), i, i + 1});
  return mc;
}

/// Relator preservation: each a_i must map to a conjugate of a generator
/// with the same order, and the product relator to a conjugate of itself.
inline bool preserves_relators(const OrbifoldGroup& g, const MappingClass& mc,
                               std::string* why = nullptr) {
  for (int i = 0; i < 4; ++i) {
    Word core = cyclic_reduce(mc.images[i]);
    if (core.length() != 1 || core.letters[0] < 0) {
      if (why) *why = "image of a" + std::to_string(i + 1) + " is not a conjugate of a generator";
      return false;
    }
    int j = core.letters[0] - 1;
    if (!(g.orders[i] == g.orders[j])) {
      if (why)
        *why = "a" + std::to_string(i + 1) + " (order " + g.orders[i].str() +
               ") maps onto a" + std::to_string(j + 1) + " (order " + g.orders[j].str() + ")";
      return false;
    }
  }
  Word prod = g.product_relator();
  if (!conjugate_in_free_group(apply(mc, prod), prod)) {
    if (why) *why = "product relator is not preserved";
    return false;
  }
  return true;
}

/// Mapping torus presentation: the base group, an extra generator t, and the
/// conjugation relations t a_i t^-1 = phi(a_i).
struct MappingTorus {
  OrbifoldGroup base;
  MappingClass monodromy;

  static constexpr int kT = 5;

  std::vector<std::string> generator_names() const { return {"a1", "a2", "a3", "a4", "t"}; }

  std::vector<Word> relators() const {
    std::vector<Word> rel = base.torsion_relators();
    rel.push_back(base.product_relator());
    for (int i = 0; i < 4; ++i)  // t a_i t^-1 phi(a_i)^-1
      rel.push_back(concat(word({kT, i + 1, -kT}), inverse(monodromy.images[i])));
    return rel;
  }
};

inline MappingTorus mapping_torus(const OrbifoldGroup& group, const MappingClass& mc) {
  std::string why;
  if (!preserves_relators(group, mc, &why))
    throw InvalidMappingClass("mapping class does not preserve relators: " + why);
  return {group, mc};
}

/// Exponent-sum (abelianized) matrix of a mapping class.
inline std::array<std::array<long long, 4>, 4> monodromy_matrix(const MappingClass& mc) {
  std::array<std::array<long long, 4>, 4> m{};
  for (int i = 0; i < 4; ++i)
    for (int l : mc.images[i].letters) {
      int j = (l > 0 ? l : -l) - 1;
      m[j][i] += l > 0 ? 1 : -1;  // column i = image of a_i
    }
  return m;
}

namespace detail {
/// Rank over Q by fraction-free elimination.
inline int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != Rational(0)) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == Rational(0)) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}
} // namespace detail

/// Free rank of H1 of the mapping torus: the rank of the coinvariants of the
/// monodromy action on H1 of the fibre orbifold, plus one for the circle
/// direction (the conjugation relations never touch t).
inline int abelianization_free_rank(const MappingTorus& torus) {
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < 4; ++i) {
    if (torus.base.orders[i].is_infinite()) continue;
    std::vector<Rational> r(4, Rational(0));
    r[i] = torus.base.orders[i].value();
    rows.push_back(r);
  }
  rows.push_back({Rational(1), Rational(1), Rational(1), Rational(1)});
  auto phi = monodromy_matrix(torus.monodromy);
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> r(4, Rational(0));
    for (int j = 0; j < 4; ++j) r[j] -= Rational(phi[j][i]);
    r[i] += Rational(1);
    rows.push_back(r);
  }
  int coinvariant_rank = 4 - detail::rational_rank(std::move(rows));
  return coinvariant_rank + 1;
}

// ---------------------------------------------------------------------------
// Reflection-order verification of supplied generator matrices
// ---------------------------------------------------------------------------

struct MatrixCheck {
  std::string line;    // arrangement line label ("12", "*0", ...)
  std::string word;    // generator word
  ExtOrder target;
  std::string status;  // "pass", "fail", "skipped (collapsed/cusp)"
  std::optional<ExtOrder> computed;
};

struct MatrixReport {
  std::vector<MatrixCheck> checks;
  bool all_passed;  // failures only; skips do not count against
};

/// Checks the ten reflection words of a 3-fold fixture {R1, R2, J, A1,
/// optional P (default R1 R2)} against the expected orders
/// (p, p, p, d, k, k, k, l, l, l).
inline MatrixReport verify_matrix_assignment(const MatrixFixture& fx, const LatticeSpec& spec) {
  if (!spec.is_three_fold())
    throw Error("matrix assignment verification covers 3-fold fixtures");
  const Mat3& r1 = fx.at("R1");
  const Mat3& r2 = fx.at("R2");
  const Mat3& j = fx.at("J");
  const Mat3& a1 = fx.at("A1");
  const Mat3 p = fx.has("P") ? fx.at("P") : r1 * r2;

  const WeightAssignment w = weights_from_spec(spec);
  const ExtOrder op = w.reflection.at(DivisorId::D12);  // p
  const ExtOrder ok = w.reflection.at(DivisorId::D01);  // k
  const ExtOrder ol = w.reflection.at(DivisorId::E1);   // l
  const ExtOrder od = w.reflection.at(DivisorId::E0);   // d

  const Mat3 r1i = inverse(r1), r2i = inverse(r2);
  struct Item { const char* line; const char* word; Mat3 m; ExtOrder target; };
  const std::vector<Item> items = {
      {"12", "R2", r2, op},
      {"13", "R1 R2 R1^-1", r1 * r2 * r1i, op},
      {"23", "R1", r1, op},
      {"*0", "P^3", p * p * p, od},
      {"01", "A1", a1, ok},
      {"02", "R2 A1 R2^-1", r2 * a1 * r2i, ok},
      {"03", "R1 R2 A1 R2^-1 R1^-1", r1 * r2 * a1 * r2i * r1i, ok},
      {"*1", "R2 R1 J", r2 * r1 * j, ol},
      {"*2", "R1 J R2", r1 * j * r2, ol},
      {"*3", "J R2 R1", j * r2 * r1, ol},
  };

  MatrixReport report{{}, true};
  for (const Item& it : items) {
    MatrixCheck check{it.line, it.word, it.target, "", std::nullopt};
    if (it.target.is_infinite() || it.target.is_negative()) {
      check.status = "skipped (collapsed/cusp)";
    } else {
      int cap = std::max<long long>(200, 4 * it.target.value().numerator());
      ExtOrder got = elliptic_order(it.m, fx.tolerance, static_cast<int>(cap));
      check.computed = got;
      check.status = got == it.target ? "pass" : "fail";
      report.all_passed = report.all_passed && check.status == "pass";
    }
    report.checks.push_back(check);
  }
  return report;
}

} // namespace dmwb
