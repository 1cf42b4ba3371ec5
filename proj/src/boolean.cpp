#include "cubal/boolean.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cubal {

struct Element::Core {
  unsigned n = 0;
  std::vector<std::string> names;
  std::vector<Bits> gens;
  std::vector<std::vector<int8_t>> labels;
};

namespace {

void ensure_same(const Element& a, const Element& b) {
  if (!a.same_parent(b))
    throw std::invalid_argument("elements belong to different algebras");
}

}  // namespace

BoolAlg Element::parent() const {
  if (!core_) throw std::logic_error("default-constructed element has no algebra");
  return BoolAlg(core_);
}

bool Element::operator<(const Element& o) const { return atoms_ < o.atoms_; }

nlohmann::json Element::to_json() const {
  return nlohmann::json(atoms_.indices());
}

BoolAlg BoolAlg::make(unsigned n_atoms, std::vector<std::string> names,
                      std::vector<Bits> gens, std::vector<std::vector<int8_t>> labels) {
  auto core = std::make_shared<Element::Core>();
  core->n = n_atoms;
  core->names = std::move(names);
  core->gens = std::move(gens);
  core->labels = std::move(labels);
  return BoolAlg(std::move(core));
}

BoolAlg BoolAlg::free_boolean(const std::vector<std::string>& names) {
  const unsigned m = unsigned(names.size());
  if (m == 0) throw std::invalid_argument("free_boolean: need at least one generator name");
  if (m > 20)
    throw std::invalid_argument("free_boolean: more than 20 generators is not supported");
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("free_boolean: empty generator name");
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("free_boolean: duplicate generator name " + names[i]);
  }
  const unsigned n = 1u << m;
  std::vector<Bits> gens(m, Bits(n));
  std::vector<std::vector<int8_t>> labels(n, std::vector<int8_t>(m));
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned j = 0; j < m; ++j) {
      const bool neg = (a >> (m - 1 - j)) & 1u;
      labels[a][j] = neg ? -1 : 1;
      if (!neg) gens[j].set(a);
    }
  }
  return make(n, names, std::move(gens), std::move(labels));
}

BoolAlg BoolAlg::power_set(unsigned n) {
  if (n > 4096) throw std::invalid_argument("power_set: more than 4096 atoms is not supported");
  std::vector<std::string> names(n);
  std::vector<Bits> gens(n, Bits(n));
  std::vector<std::vector<int8_t>> labels(n, std::vector<int8_t>(n, -1));
  for (unsigned i = 0; i < n; ++i) {
    names[i] = "a" + std::to_string(i);
    gens[i].set(i);
    labels[i][i] = 1;
  }
  return make(n, std::move(names), std::move(gens), std::move(labels));
}

unsigned BoolAlg::atom_count() const { return core_ ? core_->n : 0; }

const std::vector<std::string>& BoolAlg::generator_names() const {
  if (!core_) throw std::logic_error("invalid algebra");
  return core_->names;
}

const std::vector<int8_t>& BoolAlg::atom_label(unsigned i) const {
  if (!core_ || i >= core_->n) throw std::out_of_range("atom_label: no such atom");
  return core_->labels[i];
}

Element BoolAlg::bottom() const {
  if (!core_) throw std::logic_error("invalid algebra");
  return Element(core_, Bits(core_->n));
}

Element BoolAlg::top() const {
  if (!core_) throw std::logic_error("invalid algebra");
  return Element(core_, Bits::full(core_->n));
}

Element BoolAlg::atom(unsigned i) const {
  if (!core_ || i >= core_->n) throw std::out_of_range("atom: no such atom");
  return Element(core_, Bits::single(core_->n, i));
}

Element BoolAlg::generator(unsigned j) const {
  if (!core_ || j >= core_->gens.size()) throw std::out_of_range("generator: no such generator");
  return Element(core_, core_->gens[j]);
}

Element BoolAlg::generator(const std::string& name) const {
  if (!core_) throw std::logic_error("invalid algebra");
  for (size_t j = 0; j < core_->names.size(); ++j)
    if (core_->names[j] == name) return Element(core_, core_->gens[j]);
  throw std::invalid_argument("generator: no generator named " + name);
}

bool BoolAlg::has_generator(const std::string& name) const {
  if (!core_) return false;
  return std::find(core_->names.begin(), core_->names.end(), name) != core_->names.end();
}

Element BoolAlg::from_atom_set(const Bits& atoms) const {
  if (!core_) throw std::logic_error("invalid algebra");
  if (atoms.width() != core_->n)
    throw std::invalid_argument("from_atom_set: wrong width");
  return Element(core_, atoms);
}

Element BoolAlg::from_atom_indices(std::span<const unsigned> idx) const {
  if (!core_) throw std::logic_error("invalid algebra");
  Bits b(core_->n);
  for (unsigned i : idx) b.set(i);
  return Element(core_, b);
}

bool BoolAlg::owns(const Element& e) const { return core_ && e.core_ == core_; }

nlohmann::json BoolAlg::to_json() const {
  if (!core_) throw std::logic_error("invalid algebra");
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& row : core_->labels) {
    nlohmann::json r = nlohmann::json::array();
    for (int8_t v : row) r.push_back(int(v));
    labels.push_back(std::move(r));
  }
  return nlohmann::json{{"generators", core_->names}, {"atom_labels", std::move(labels)}};
}

Element meet(const Element& a, const Element& b) {
  ensure_same(a, b);
  return Element(a.core_, a.atoms_ & b.atoms_);
}

Element join(const Element& a, const Element& b) {
  ensure_same(a, b);
  return Element(a.core_, a.atoms_ | b.atoms_);
}

Element complement(const Element& a) {
  if (!a.core_) throw std::logic_error("default-constructed element");
  return Element(a.core_, ~a.atoms_);
}

Element difference(const Element& a, const Element& b) {
  ensure_same(a, b);
  return Element(a.core_, a.atoms_.minus(b.atoms_));
}

bool leq(const Element& a, const Element& b) {
  ensure_same(a, b);
  return a.atoms().subset_of(b.atoms());
}

bool lt(const Element& a, const Element& b) { return leq(a, b) && a != b; }

bool is_atom(const Element& a) { return a.atoms().count() == 1; }

Element join_all(const BoolAlg& B, std::span<const Element> xs) {
  Element acc = B.bottom();
  for (const auto& x : xs) acc = join(acc, x);
  return acc;
}

Element meet_all(const BoolAlg& B, std::span<const Element> xs) {
  Element acc = B.top();
  for (const auto& x : xs) acc = meet(acc, x);
  return acc;
}

unsigned atoms_below(const Element& a) { return a.atoms().count(); }

Quotient::Quotient(const BoolAlg& base, std::span<const Element> ideal_gens) : base_(base) {
  Element d = base.bottom();
  for (const auto& g : ideal_gens) {
    if (!base.owns(g))
      throw std::invalid_argument("quotient: ideal generator from a different algebra");
    d = join(d, g);
  }
  const unsigned n = base.atom_count();
  new_index_.assign(n, UINT32_MAX);
  for (unsigned i = 0; i < n; ++i) {
    if (!d.atoms().test(i)) {
      new_index_[i] = uint32_t(surviving_.size());
      surviving_.push_back(i);
    }
  }
  const unsigned n2 = unsigned(surviving_.size());
  const auto& names = base.generator_names();
  std::vector<Bits> gens(names.size(), Bits(n2));
  std::vector<std::vector<int8_t>> labels(n2);
  for (unsigned i2 = 0; i2 < n2; ++i2) labels[i2] = base.atom_label(surviving_[i2]);
  for (size_t j = 0; j < names.size(); ++j) {
    const Element g = base.generator(unsigned(j));
    for (unsigned i2 = 0; i2 < n2; ++i2)
      if (g.atoms().test(surviving_[i2])) gens[j].set(i2);
  }
  quot_ = BoolAlg::make(n2, names, std::move(gens), std::move(labels));
}

Element Quotient::project(const Element& x) const {
  if (!base_.owns(x))
    throw std::invalid_argument("quotient projection: element from a different algebra");
  Bits b(quot_.atom_count());
  for (unsigned i2 = 0; i2 < surviving_.size(); ++i2)
    if (x.atoms().test(surviving_[i2])) b.set(i2);
  return quot_.from_atom_set(b);
}

Subalgebra generated_subalgebra(const BoolAlg& B, std::span<const Element> gens) {
  const unsigned n = B.atom_count();
  for (const auto& g : gens)
    if (!B.owns(g))
      throw std::invalid_argument("generated_subalgebra: element from a different algebra");
  // signature of an atom = membership pattern across the generators
  std::unordered_map<size_t, std::vector<unsigned>> seen;  // hash -> block ids (collision chain)
  std::vector<Bits> sigs;
  std::vector<unsigned> block_of(n, 0);
  std::vector<Bits> blocks;
  for (unsigned a = 0; a < n; ++a) {
    Bits sig(unsigned(gens.size()));
    for (unsigned j = 0; j < gens.size(); ++j)
      if (gens[j].atoms().test(a)) sig.set(j);
    unsigned id = UINT32_MAX;
    auto& chain = seen[sig.hash()];
    for (unsigned c : chain)
      if (sigs[c] == sig) { id = c; break; }
    if (id == UINT32_MAX) {
      id = unsigned(sigs.size());
      chain.push_back(id);
      sigs.push_back(sig);
      blocks.emplace_back(n);
    }
    block_of[a] = id;
    blocks[id].set(a);
  }
  const unsigned n2 = unsigned(blocks.size());
  std::vector<std::string> names(gens.size());
  std::vector<Bits> sub_gens(gens.size(), Bits(n2));
  std::vector<std::vector<int8_t>> labels(n2, std::vector<int8_t>(gens.size(), -1));
  for (size_t j = 0; j < gens.size(); ++j) names[j] = "g" + std::to_string(j);
  for (unsigned b = 0; b < n2; ++b) {
    for (unsigned j = 0; j < gens.size(); ++j) {
      if (sigs[b].test(j)) {
        sub_gens[j].set(b);
        labels[b][j] = 1;
      }
    }
  }
  Subalgebra out;
  out.algebra = BoolAlg::make(n2, std::move(names), std::move(sub_gens), std::move(labels));
  out.atom_images.reserve(n2);
  for (unsigned b = 0; b < n2; ++b) out.atom_images.push_back(B.from_atom_set(blocks[b]));
  return out;
}

}  // namespace cubal
