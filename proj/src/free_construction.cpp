#include "cubal/free_construction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "cubal/kernels.hpp"
#include "cubal/keys.hpp"

namespace cubal {

namespace {

std::string s_name(unsigned i) { return "s" + std::to_string(i); }
std::string t_name(unsigned i) { return "t" + std::to_string(i); }

unsigned thread_count() {
  if (const char* env = std::getenv("CUBAL_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) v = 1;
    if (v > 64) v = 64;
    return unsigned(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

Element FreeInstance::s(unsigned i) const { return algebra.generator(s_name(i)); }
Element FreeInstance::t(unsigned i) const { return algebra.generator(t_name(i)); }

std::vector<std::string> free_generator_names(unsigned k) {
  std::vector<std::string> names;
  names.reserve(2 * (k + 1));
  for (unsigned i = 0; i <= k; ++i) names.push_back(s_name(i));
  for (unsigned i = 0; i <= k; ++i) names.push_back(t_name(i));
  return names;
}

std::vector<Element> ideal_generators(unsigned k, const BoolAlg& F) {
  if (F.generator_names() != free_generator_names(k))
    throw std::invalid_argument(
        "ideal_generators: algebra is not the free algebra on s0..sk, t0..tk");
  std::vector<Element> out;
  out.reserve(2 * k + 3);
  out.push_back(F.generator(s_name(0)));
  for (unsigned i = 0; i <= k; ++i)
    out.push_back(difference(F.generator(s_name(i)), F.generator(t_name(i))));
  for (unsigned i = 0; i < k; ++i) {
    Element r = F.generator(t_name(0));
    for (unsigned j = 1; j <= i; ++j) r = difference(r, F.generator(s_name(j)));
    r = difference(r, F.generator(t_name(i + 1)));
    out.push_back(r);
  }
  Element q = F.generator(t_name(0));
  for (unsigned j = 0; j <= k; ++j) q = difference(q, F.generator(s_name(j)));
  out.push_back(q);
  return out;
}

FreeInstance build(unsigned k) {
  if (k > 7)
    throw std::invalid_argument("build: k > 7 is not supported (atom space 4^(k+1))");
  BoolAlg F = BoolAlg::free_boolean(free_generator_names(k));
  Quotient quot(F, ideal_generators(k, F));
  BoolAlg B = quot.algebra();
  std::vector<Interval> gens;
  gens.reserve(k + 1);
  for (unsigned i = 0; i <= k; ++i)
    gens.emplace_back(B.generator(s_name(i)), B.generator(t_name(i)));
  return FreeInstance{k, std::move(F), std::move(quot), std::move(B), std::move(gens)};
}

std::vector<std::pair<Element, Element>> sigma_tau(const BoolAlg& B, unsigned k) {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(k + 1);
  Element sigma = B.generator(s_name(0));
  Element tau = B.generator(t_name(0));
  out.emplace_back(sigma, tau);
  for (unsigned i = 1; i <= k; ++i) {
    Element ns = join(sigma, difference(tau, B.generator(t_name(i))));
    Element nt = join(sigma, difference(tau, B.generator(s_name(i))));
    sigma = std::move(ns);
    tau = std::move(nt);
    out.emplace_back(sigma, tau);
  }
  return out;
}

std::vector<std::pair<Element, Element>> sigma_tau(const FreeInstance& inst) {
  return sigma_tau(inst.algebra, inst.k);
}

std::vector<Interval> delta_sequence(const FreeInstance& inst) {
  std::vector<Interval> out;
  out.reserve(inst.k + 1);
  out.push_back(inst.gens[0]);
  for (unsigned i = 1; i <= inst.k; ++i) out.push_back(caret(out.back(), inst.gens[i]));
  return out;
}

bool relation_R(unsigned l, unsigned k, unsigned i, const Element& t, const Element& alpha) {
  if (i >= k) throw std::out_of_range("relation_R: need i < k");
  const BoolAlg B = t.parent();
  Element rhs = alpha;
  for (unsigned j = l; j <= i; ++j) rhs = join(rhs, B.generator(s_name(j)));
  rhs = join(rhs, B.generator(t_name(i + 1)));
  return leq(t, rhs);
}

bool relation_Q(unsigned l, unsigned k, const Element& t, const Element& alpha) {
  const BoolAlg B = t.parent();
  Element rhs = alpha;
  for (unsigned j = l; j <= k; ++j) rhs = join(rhs, B.generator(s_name(j)));
  return leq(t, rhs);
}

nlohmann::json RelationsReport::to_json() const {
  nlohmann::json w;
  if (witness) w = *witness;
  return nlohmann::json{{"k", k},
                        {"subsets_checked", subsets_checked},
                        {"exhaustive", exhaustive},
                        {"pass", pass},
                        {"witness", w}};
}

RelationsReport relations_equivalence_check(unsigned k, uint64_t max_subsets, uint64_t seed) {
  if (k > 5) throw std::invalid_argument("relations_equivalence_check: k > 5 unsupported");
  BoolAlg F = BoolAlg::free_boolean(free_generator_names(k));
  const std::vector<Element> cands = ideal_generators(k, F);
  const unsigned m = unsigned(cands.size());  // 2k+3

  RelationsReport rep;
  rep.k = k;
  rep.exhaustive = m <= 11;  // all subsets through k = 4 (2^11); k = 5 is sampled

  auto check_subset = [&](uint64_t mask) -> bool {
    std::vector<Element> chosen;
    for (unsigned i = 0; i < m; ++i)
      if ((mask >> i) & 1u) chosen.push_back(cands[i]);
    Quotient q(F, chosen);
    const BoolAlg& B = q.algebra();
    auto st = sigma_tau(B, k);
    const bool lhs = st[k].first.is_bottom() && st[k].second.is_bottom();
    const Element t0 = B.generator("t0");
    const Element bot = B.bottom();
    bool rhs = B.generator("s0").is_bottom();
    for (unsigned j = 0; rhs && j < k; ++j) rhs = relation_R(1, k, j, t0, bot);
    if (rhs) rhs = relation_Q(1, k, t0, bot);
    return lhs == rhs;
  };

  auto record = [&](uint64_t mask) {
    ++rep.subsets_checked;
    if (!check_subset(mask) && rep.pass) {
      rep.pass = false;
      std::vector<unsigned> w;
      for (unsigned i = 0; i < m; ++i)
        if ((mask >> i) & 1u) w.push_back(i);
      rep.witness = std::move(w);
    }
  };

  rep.pass = true;
  if (rep.exhaustive) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) record(mask);
  } else {
    std::mt19937_64 rng(seed);
    record(0);
    record((uint64_t{1} << m) - 1);
    for (unsigned i = 0; i < m; ++i) record(uint64_t{1} << i);
    while (rep.subsets_checked < max_subsets) record(rng() & ((uint64_t{1} << m) - 1));
  }
  return rep;
}

std::vector<Interval> build_LX(const FreeInstance& inst) {
  if (inst.k > 2)
    throw std::invalid_argument("build_LX: k > 2 enumerates 3^" +
                                std::to_string(inst.algebra.atom_count()) +
                                " intervals; not supported");
  const unsigned n = keys::check_width(inst.algebra);
  std::vector<uint32_t> gen_keys;
  for (const auto& g : inst.gens) gen_keys.push_back(keys::from_interval(g));

  // every valid key, ascending; then a batched preceq filter per generator
  std::vector<uint32_t> all;
  all.reserve(1u << (2 * n > 26 ? 26 : 2 * n));
  keys::for_each_interval_key(n, [&](uint32_t key) { all.push_back(key); });

  const auto& kb = kern::active_backend();
  const unsigned workers = std::min<unsigned>(thread_count(), 8);
  std::vector<std::vector<uint32_t>> kept(workers);
  auto work = [&](unsigned w) {
    const size_t chunk = (all.size() + workers - 1) / workers;
    const size_t a = w * chunk;
    const size_t b = std::min(all.size(), a + chunk);
    if (a >= b) return;
    std::vector<uint8_t> flags(b - a), acc(b - a, 0);
    for (uint32_t gk : gen_keys) {
      kb.preceq_flags(gk, all.data() + a, flags.data(), b - a, n);
      for (size_t i = 0; i < flags.size(); ++i) acc[i] |= flags[i];
    }
    for (size_t i = 0; i < acc.size(); ++i)
      if (acc[i]) kept[w].push_back(all[a + i]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (unsigned w = 0; w < workers; ++w) ts.emplace_back(work, w);
    for (auto& t : ts) t.join();
  }

  std::vector<Interval> out;
  for (unsigned w = 0; w < workers; ++w)
    for (uint32_t key : kept[w]) out.push_back(keys::to_interval(key, n, inst.algebra));
  return out;
}

Element new_atom(const FreeInstance& inst) {
  if (inst.k == 0) throw std::invalid_argument("new_atom: defined for k >= 1");
  Element a = inst.t(0);
  for (unsigned i = 1; i + 1 <= inst.k; ++i) a = difference(a, inst.s(i));
  return a;
}

ChainStep chain_step(const FreeInstance& prev, const FreeInstance& cur) {
  if (cur.k != prev.k + 1)
    throw std::invalid_argument("chain_step: instances are not consecutive");
  const unsigned k = cur.k;
  const unsigned n_prev = prev.algebra.atom_count();
  const unsigned n_cur = cur.algebra.atom_count();

  std::map<std::vector<int8_t>, uint32_t> prev_by_label;
  for (uint32_t i = 0; i < n_prev; ++i) prev_by_label[prev.algebra.atom_label(i)] = i;

  ChainStep st;
  st.parent.assign(n_cur, UINT32_MAX);
  st.kind.assign(n_cur, ChildKind::fresh);
  st.consistent = true;
  // cur labels run over names s0..sk,t0..tk; dropping positions k (s_k) and
  // 2k+1 (t_k) gives the label over the prev names
  for (uint32_t i = 0; i < n_cur; ++i) {
    const auto& lab = cur.algebra.atom_label(i);
    const int8_t es = lab[k], et = lab[2 * k + 1];
    std::vector<int8_t> parent_lab;
    parent_lab.reserve(2 * k);
    for (unsigned p = 0; p < lab.size(); ++p)
      if (p != k && p != 2 * k + 1) parent_lab.push_back(lab[p]);
    auto it = prev_by_label.find(parent_lab);
    if (es > 0 && et < 0) {
      st.consistent = false;
      if (st.detail.empty())
        st.detail = "atom " + std::to_string(i) + " carries the dead sign pair (+s_k, -t_k)";
    }
    if (it == prev_by_label.end()) continue;  // fresh
    st.parent[i] = it->second;
    st.kind[i] = (es > 0) ? ChildKind::with_s
                          : (et > 0 ? ChildKind::with_mid : ChildKind::with_not_t);
  }
  return st;
}

SplitReport check_atom_split(const FreeInstance& prev, const FreeInstance& cur) {
  SplitReport rep;
  rep.prev_atoms = prev.algebra.atom_count();
  rep.cur_atoms = cur.algebra.atom_count();
  ChainStep st = chain_step(prev, cur);
  if (!st.consistent) {
    rep.detail = st.detail;
    return rep;
  }
  std::vector<std::array<uint32_t, 3>> seen(rep.prev_atoms, {0, 0, 0});
  for (uint32_t i = 0; i < rep.cur_atoms; ++i) {
    if (st.parent[i] == UINT32_MAX) {
      ++rep.fresh_atoms;
      continue;
    }
    switch (st.kind[i]) {
      case ChildKind::with_s: ++seen[st.parent[i]][0]; break;
      case ChildKind::with_mid: ++seen[st.parent[i]][1]; break;
      case ChildKind::with_not_t: ++seen[st.parent[i]][2]; break;
      default: break;
    }
  }
  for (uint32_t p = 0; p < rep.prev_atoms; ++p) {
    if (seen[p] != std::array<uint32_t, 3>{1, 1, 1}) {
      rep.detail = "atom " + std::to_string(p) + " of the smaller algebra does not have "
                   "exactly one child of each kind";
      return rep;
    }
  }
  if (rep.cur_atoms != 3 * rep.prev_atoms + 1) {
    rep.detail = "atom count is not 3n+1";
    return rep;
  }
  if (rep.fresh_atoms != 1) {
    rep.detail = "expected exactly one fresh atom, found " + std::to_string(rep.fresh_atoms);
    return rep;
  }
  Element fresh = new_atom(cur);
  if (!is_atom(fresh)) {
    rep.detail = "t0 ∧ ⋀¬si is not an atom";
    return rep;
  }
  // the fresh atom must be exactly the one with no parent
  uint32_t fresh_idx = UINT32_MAX;
  for (uint32_t i = 0; i < rep.cur_atoms; ++i)
    if (st.parent[i] == UINT32_MAX) fresh_idx = i;
  if (fresh != cur.algebra.atom(fresh_idx)) {
    rep.detail = "fresh atom is not t0 ∧ ⋀¬si";
    return rep;
  }
  rep.pass = true;
  return rep;
}

nlohmann::json instance_json(const FreeInstance& inst, std::optional<uint64_t> lx_size) {
  auto st = sigma_tau(inst);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : inst.gens) gens.push_back(g.to_json());
  nlohmann::json j{{"k", inst.k},
                   {"atom_count", inst.algebra.atom_count()},
                   {"algebra", inst.algebra.to_json()},
                   {"intervals", std::move(gens)},
                   {"sigma_tau_zero",
                    st[inst.k].first.is_bottom() && st[inst.k].second.is_bottom()},
                   {"lx_size", nullptr}};
  if (lx_size) j["lx_size"] = *lx_size;
  return j;
}

}  // namespace cubal
