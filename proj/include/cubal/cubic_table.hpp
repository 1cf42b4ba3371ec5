#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubal/cubic.hpp"

namespace cubal {

// A finite cubic algebra as an explicit operation table: carrier {0..n-1},
// a greatest element, the join table, and the partial difference operation
// delta(y,x), defined exactly when x <= y in the join order.
struct CubicTable {
  uint32_t n = 0;
  uint32_t one = 0;
  std::vector<uint32_t> join;  // n*n, row-major
  std::vector<int32_t> delta;  // n*n, -1 where undefined

  uint32_t join_at(uint32_t x, uint32_t y) const { return join[size_t(x) * n + y]; }
  int32_t delta_at(uint32_t y, uint32_t x) const { return delta[size_t(y) * n + x]; }
  bool leq_at(uint32_t x, uint32_t y) const { return join_at(x, y) == y; }

  // tabulate a family of intervals that is closed under join and under
  // delta of comparable pairs (throws if it is not, or if there is no
  // greatest element)
  static CubicTable from_intervals(const std::vector<Interval>& elems);

  static CubicTable from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct CheckOptions {
  size_t exhaustive_limit = 100;   // carriers up to this size get all tuples
  uint64_t sample_tuples = 200000; // otherwise this many random tuples
  uint64_t seed = 0x5eedc0de;
};

struct AxiomCheckEntry {
  std::string name;
  bool pass = true;
  uint64_t checked = 0;  // tuples that satisfied the hypothesis
  std::optional<std::array<uint32_t, 3>> witness;  // first failing tuple
};

struct AxiomReport {
  bool table_ok = false;
  std::string table_error;
  bool exhaustive = false;
  std::vector<AxiomCheckEntry> axioms;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

// checks that join is a semilattice with greatest element `one`, that delta
// is defined exactly on comparable pairs, and the cubic axioms:
//   (a) delta(y,x) ∨ x = y
//   (b) delta(z, delta(y,x)) = delta(delta(z,y), delta(z,x))   (x<=y<=z)
//   (c) delta(y, delta(y,x)) = x
//   (d) x<=y<=z implies delta(z,x) <= delta(z,y)
//   (e) (x->y)->y = x ∨ y        where x->y = delta(1, delta(x∨y, y)) ∨ y
//   (f) x->(y->z) = y->(x->z)
AxiomReport check_cubic_axioms(const CubicTable& t, const CheckOptions& opt = {});

struct MrReport {
  bool table_ok = false;
  std::string table_error;
  bool pass = false;
  bool exhaustive = false;
  uint64_t checked = 0;
  std::optional<std::array<uint32_t, 3>> witness;  // (x, a, b)

  nlohmann::json to_json() const;
};

// the meet-complement law: for a,b < x,
//   delta(x,a) ∨ b < x  iff  a ∧ b does not exist in the carrier order
MrReport check_mr_axiom(const CubicTable& t, const CheckOptions& opt = {});

// Hasse diagram of the containment order on a family of intervals, as DOT.
// Nodes are labelled [lo,hi] with endpoints printed as atom index sets.
std::string hasse_dot(const std::vector<Interval>& elems);

}  // namespace cubal
