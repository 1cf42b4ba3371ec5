#include "cubal/cubic_table.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cubal {

CubicTable CubicTable::from_intervals(const std::vector<Interval>& elems) {
  if (elems.empty()) throw std::invalid_argument("from_intervals: empty carrier");
  if (elems.size() > 4096)
    throw std::invalid_argument("from_intervals: carrier too large to tabulate");
  const uint32_t n = uint32_t(elems.size());
  std::map<Interval, uint32_t> index;
  for (uint32_t i = 0; i < n; ++i)
    if (!index.emplace(elems[i], i).second)
      throw std::invalid_argument("from_intervals: duplicate element");

  CubicTable t;
  t.n = n;
  t.join.assign(size_t(n) * n, 0);
  t.delta.assign(size_t(n) * n, -1);

  Interval top = elems[0];
  for (uint32_t i = 1; i < n; ++i) top = interval_join(top, elems[i]);
  auto it = index.find(top);
  if (it == index.end()) throw std::invalid_argument("from_intervals: no greatest element");
  t.one = it->second;

  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i; j < n; ++j) {
      auto jt = index.find(interval_join(elems[i], elems[j]));
      if (jt == index.end())
        throw std::invalid_argument("from_intervals: not closed under join");
      t.join[size_t(i) * n + j] = jt->second;
      t.join[size_t(j) * n + i] = jt->second;
    }
  }
  for (uint32_t y = 0; y < n; ++y) {
    for (uint32_t x = 0; x < n; ++x) {
      if (!interval_leq(elems[x], elems[y])) continue;
      auto dt = index.find(interval_delta(elems[y], elems[x]));
      if (dt == index.end())
        throw std::invalid_argument("from_intervals: not closed under delta");
      t.delta[size_t(y) * n + x] = int32_t(dt->second);
    }
  }
  return t;
}

CubicTable CubicTable::from_json(const nlohmann::json& j) {
  CubicTable t;
  t.n = j.at("carrier").get<uint32_t>();
  if (t.n == 0) throw std::invalid_argument("table: empty carrier");
  if (t.n > 4096) throw std::invalid_argument("table: carrier too large");
  t.one = j.at("one").get<uint32_t>();
  if (t.one >= t.n) throw std::invalid_argument("table: one out of range");
  const auto& join = j.at("join");
  if (!join.is_array() || join.size() != t.n)
    throw std::invalid_argument("table: join must be an n x n matrix");
  t.join.reserve(size_t(t.n) * t.n);
  for (const auto& row : join) {
    if (!row.is_array() || row.size() != t.n)
      throw std::invalid_argument("table: join must be an n x n matrix");
    for (const auto& v : row) {
      uint32_t u = v.get<uint32_t>();
      if (u >= t.n) throw std::invalid_argument("table: join entry out of range");
      t.join.push_back(u);
    }
  }
  t.delta.assign(size_t(t.n) * t.n, -1);
  for (const auto& triple : j.at("delta")) {
    if (!triple.is_array() || triple.size() != 3)
      throw std::invalid_argument("table: delta rows must be [y, x, d] triples");
    uint32_t y = triple[0].get<uint32_t>();
    uint32_t x = triple[1].get<uint32_t>();
    uint32_t d = triple[2].get<uint32_t>();
    if (y >= t.n || x >= t.n || d >= t.n)
      throw std::invalid_argument("table: delta entry out of range");
    if (t.delta[size_t(y) * t.n + x] != -1)
      throw std::invalid_argument("table: duplicate delta entry");
    t.delta[size_t(y) * t.n + x] = int32_t(d);
  }
  return t;
}

nlohmann::json CubicTable::to_json() const {
  nlohmann::json join = nlohmann::json::array();
  for (uint32_t x = 0; x < n; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (uint32_t y = 0; y < n; ++y) row.push_back(join_at(x, y));
    join.push_back(std::move(row));
  }
  nlohmann::json delta = nlohmann::json::array();
  for (uint32_t y = 0; y < n; ++y)
    for (uint32_t x = 0; x < n; ++x)
      if (delta_at(y, x) >= 0)
        delta.push_back(nlohmann::json::array({y, x, uint32_t(delta_at(y, x))}));
  return nlohmann::json{{"carrier", n}, {"one", one}, {"join", join}, {"delta", delta}};
}

namespace {

std::string validate_table(const CubicTable& t, std::mt19937_64& rng, bool exhaustive,
                           uint64_t tuples) {
  const uint32_t n = t.n;
  if (n == 0) return "empty carrier";
  if (t.join.size() != size_t(n) * n) return "join table has wrong size";
  if (t.delta.size() != size_t(n) * n) return "delta table has wrong size";
  if (t.one >= n) return "one out of range";
  for (uint32_t v : t.join)
    if (v >= n) return "join entry out of range";
  auto fail_at = [](const char* what, uint32_t x, uint32_t y) {
    std::ostringstream os;
    os << what << " at (" << x << ", " << y << ")";
    return os.str();
  };
  for (uint32_t x = 0; x < n; ++x) {
    if (t.join_at(x, x) != x) return fail_at("join not idempotent", x, x);
    if (t.join_at(x, t.one) != t.one) return fail_at("one not absorbing", x, t.one);
  }
  for (uint32_t x = 0; x < n; ++x) {
    for (uint32_t y = 0; y < n; ++y) {
      if (t.join_at(x, y) != t.join_at(y, x)) return fail_at("join not commutative", x, y);
      const bool comparable = t.leq_at(x, y);
      const int32_t d = t.delta_at(y, x);
      if (comparable && d < 0) return fail_at("delta missing on comparable pair", y, x);
      if (!comparable && d >= 0) return fail_at("delta defined on incomparable pair", y, x);
      if (d >= 0 && uint32_t(d) >= n) return fail_at("delta entry out of range", y, x);
    }
  }
  auto assoc_at = [&](uint32_t x, uint32_t y, uint32_t z) {
    return t.join_at(t.join_at(x, y), z) == t.join_at(x, t.join_at(y, z));
  };
  if (exhaustive) {
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y)
        for (uint32_t z = 0; z < n; ++z)
          if (!assoc_at(x, y, z)) return "join not associative";
  } else {
    for (uint64_t i = 0; i < tuples; ++i) {
      uint32_t x = uint32_t(rng() % n), y = uint32_t(rng() % n), z = uint32_t(rng() % n);
      if (!assoc_at(x, y, z)) return "join not associative";
    }
  }
  return {};
}

}  // namespace

bool AxiomReport::all_pass() const {
  if (!table_ok) return false;
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json ax = nlohmann::json::array();
  for (const auto& a : axioms) {
    nlohmann::json w;
    if (a.witness) w = nlohmann::json::array({(*a.witness)[0], (*a.witness)[1], (*a.witness)[2]});
    ax.push_back({{"name", a.name}, {"pass", a.pass}, {"checked", a.checked}, {"witness", w}});
  }
  return nlohmann::json{{"table_ok", table_ok},
                        {"table_error", table_error},
                        {"exhaustive", exhaustive},
                        {"axioms", ax},
                        {"pass", all_pass()}};
}

AxiomReport check_cubic_axioms(const CubicTable& t, const CheckOptions& opt) {
  AxiomReport rep;
  std::mt19937_64 rng(opt.seed);
  const uint32_t n = t.n;
  rep.exhaustive = n <= opt.exhaustive_limit;
  rep.table_error = validate_table(t, rng, rep.exhaustive, opt.sample_tuples);
  rep.table_ok = rep.table_error.empty();
  if (!rep.table_ok) return rep;

  auto jo = [&](uint32_t x, uint32_t y) { return t.join_at(x, y); };
  // delta lookups inside derived terms can be undefined on a malformed
  // table; propagate that as an instance failure rather than reading
  // out of bounds
  const int32_t kBad = -1;
  auto de = [&](int32_t y, int32_t x) -> int32_t {
    if (y < 0 || x < 0) return kBad;
    return t.delta_at(uint32_t(y), uint32_t(x));
  };
  auto imp = [&](uint32_t x, uint32_t y) -> int32_t {
    int32_t inner = de(int32_t(t.one), de(int32_t(jo(x, y)), int32_t(y)));
    if (inner < 0) return kBad;
    return int32_t(jo(uint32_t(inner), y));
  };

  // each axiom gets the hypothesis-satisfying tuple and returns pass/fail
  struct Ax {
    const char* name;
    unsigned arity;  // 2 or 3, comparable chain expected
    bool total;      // no order hypothesis
  };
  const Ax defs[] = {
      {"delta_join_restores", 2, false}, {"delta_distributes", 3, false},
      {"delta_involutive", 2, false},    {"delta_monotone", 3, false},
      {"implication_absorbs", 2, true},  {"implication_exchange", 3, true},
  };
  auto eval = [&](size_t ax, uint32_t x, uint32_t y, uint32_t z) -> bool {
    const int32_t ix = int32_t(x), iy = int32_t(y), iz = int32_t(z);
    switch (ax) {
      case 0: {
        int32_t d = de(iy, ix);
        return d >= 0 && jo(uint32_t(d), x) == y;
      }
      case 1: {
        int32_t lhs = de(iz, de(iy, ix));
        int32_t rhs = de(de(iz, iy), de(iz, ix));
        return lhs >= 0 && lhs == rhs;
      }
      case 2: {
        int32_t d = de(iy, de(iy, ix));
        return d >= 0 && uint32_t(d) == x;
      }
      case 3: {
        int32_t zx = de(iz, ix), zy = de(iz, iy);
        return zx >= 0 && zy >= 0 && t.leq_at(uint32_t(zx), uint32_t(zy));
      }
      case 4: {
        int32_t l = imp(x, y);
        return l >= 0 && imp(uint32_t(l), y) == int32_t(jo(x, y));
      }
      case 5: {
        int32_t a = imp(y, z), b = imp(x, z);
        return a >= 0 && b >= 0 && imp(x, uint32_t(a)) >= 0 &&
               imp(x, uint32_t(a)) == imp(y, uint32_t(b));
      }
      default: return false;
    }
  };

  for (size_t ax = 0; ax < 6; ++ax) {
    AxiomCheckEntry e;
    e.name = defs[ax].name;
    auto run = [&](uint32_t x, uint32_t y, uint32_t z) {
      ++e.checked;
      const bool ok = eval(ax, x, y, z);
      if (!ok && e.pass) {
        e.pass = false;
        e.witness = {x, y, z};
      }
    };
    if (rep.exhaustive) {
      if (defs[ax].total) {
        for (uint32_t x = 0; x < n; ++x)
          for (uint32_t y = 0; y < n; ++y) {
            if (defs[ax].arity == 2) {
              run(x, y, 0);
            } else {
              for (uint32_t z = 0; z < n; ++z) run(x, y, z);
            }
          }
      } else if (defs[ax].arity == 2) {
        for (uint32_t x = 0; x < n; ++x)
          for (uint32_t y = 0; y < n; ++y)
            if (t.leq_at(x, y)) run(x, y, 0);
      } else {
        for (uint32_t x = 0; x < n; ++x)
          for (uint32_t y = 0; y < n; ++y) {
            if (!t.leq_at(x, y)) continue;
            for (uint32_t z = 0; z < n; ++z)
              if (t.leq_at(y, z)) run(x, y, z);
          }
      }
    } else {
      for (uint64_t i = 0; i < opt.sample_tuples; ++i) {
        uint32_t x = uint32_t(rng() % n);
        uint32_t y = uint32_t(rng() % n);
        uint32_t z = uint32_t(rng() % n);
        if (!defs[ax].total) {
          // force the order hypothesis by joining up
          y = jo(x, y);
          z = jo(y, z);
        }
        run(x, y, z);
      }
    }
    rep.axioms.push_back(std::move(e));
  }
  return rep;
}

nlohmann::json MrReport::to_json() const {
  nlohmann::json w;
  if (witness) w = nlohmann::json::array({(*witness)[0], (*witness)[1], (*witness)[2]});
  return nlohmann::json{{"table_ok", table_ok}, {"table_error", table_error},
                        {"pass", pass},         {"exhaustive", exhaustive},
                        {"checked", checked},   {"witness", w}};
}

MrReport check_mr_axiom(const CubicTable& t, const CheckOptions& opt) {
  MrReport rep;
  std::mt19937_64 rng(opt.seed);
  const uint32_t n = t.n;
  rep.exhaustive = n <= opt.exhaustive_limit;
  rep.table_error = validate_table(t, rng, rep.exhaustive, opt.sample_tuples);
  rep.table_ok = rep.table_error.empty();
  if (!rep.table_ok) return rep;

  std::vector<Bits> below(n, Bits(n));
  for (uint32_t c = 0; c < n; ++c)
    for (uint32_t x = 0; x < n; ++x)
      if (t.leq_at(c, x)) below[x].set(c);

  auto meet_exists = [&](uint32_t a, uint32_t b) {
    Bits common = below[a] & below[b];
    for (unsigned c : common.indices())
      if (common.subset_of(below[c])) return true;
    return false;
  };
  auto lt_at = [&](uint32_t a, uint32_t x) { return a != x && t.leq_at(a, x); };
  auto run = [&](uint32_t x, uint32_t a, uint32_t b) {
    ++rep.checked;
    const uint32_t lhs = t.join_at(uint32_t(t.delta_at(x, a)), b);
    const bool strictly_below = lt_at(lhs, x);
    if (strictly_below != !meet_exists(a, b) && rep.pass) {
      rep.pass = false;
      rep.witness = {x, a, b};
    }
  };

  rep.pass = true;
  if (rep.exhaustive) {
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t a = 0; a < n; ++a) {
        if (!lt_at(a, x)) continue;
        for (uint32_t b = 0; b < n; ++b)
          if (lt_at(b, x)) run(x, a, b);
      }
  } else {
    uint64_t attempts = 0;
    const uint64_t max_attempts = opt.sample_tuples * 20;
    while (rep.checked < opt.sample_tuples && attempts < max_attempts) {
      ++attempts;
      uint32_t x = uint32_t(rng() % n);
      uint32_t a = uint32_t(rng() % n);
      uint32_t b = uint32_t(rng() % n);
      if (lt_at(a, x) && lt_at(b, x)) run(x, a, b);
    }
  }
  return rep;
}

std::string hasse_dot(const std::vector<Interval>& elems) {
  const size_t n = elems.size();
  if (n > 4096) throw std::invalid_argument("hasse_dot: too many elements");
  std::vector<Bits> below(n, Bits(unsigned(n))), above(n, Bits(unsigned(n)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (interval_leq(elems[i], elems[j])) {
        below[j].set(i);
        above[i].set(j);
      }
  auto set_str = [](const Element& e) {
    std::string s = "{";
    bool first = true;
    for (unsigned i : e.atom_indices()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  };
  std::ostringstream os;
  os << "digraph cubic {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < n; ++i)
    os << "  n" << i << " [label=\"[" << set_str(elems[i].lo()) << ","
       << set_str(elems[i].hi()) << "]\"];\n";
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j : above[i].indices()) {
      if (j == i) continue;
      // cover: nothing strictly between
      Bits between = above[i] & below[j];
      if (between.count() == 2) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cubal
