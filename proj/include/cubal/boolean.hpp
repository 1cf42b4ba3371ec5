#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubal/bits.hpp"

namespace cubal {

class BoolAlg;
class Element;
struct Subalgebra;
Subalgebra generated_subalgebra(const BoolAlg& B, std::span<const Element> gens);

// Element of a finite boolean algebra, represented by its set of atoms.
// Elements remember which algebra they belong to; operations on elements
// from different algebras throw.
class Element {
public:
  Element() = default;

  const Bits& atoms() const { return atoms_; }
  unsigned atom_count() const { return atoms_.count(); }
  std::vector<unsigned> atom_indices() const { return atoms_.indices(); }
  bool is_bottom() const { return atoms_.none(); }
  BoolAlg parent() const;
  bool same_parent(const Element& o) const { return core_ == o.core_; }

  bool operator==(const Element& o) const {
    return core_ == o.core_ && atoms_ == o.atoms_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }
  // canonical order within one algebra, used for deterministic output
  bool operator<(const Element& o) const;

  nlohmann::json to_json() const;  // sorted atom index array

private:
  friend class BoolAlg;
  friend Element meet(const Element&, const Element&);
  friend Element join(const Element&, const Element&);
  friend Element complement(const Element&);
  friend Element difference(const Element&, const Element&);
  struct Core;
  Element(std::shared_ptr<const Core> core, Bits atoms)
      : core_(std::move(core)), atoms_(std::move(atoms)) {}

  std::shared_ptr<const Core> core_;
  Bits atoms_;
};

// Finite boolean algebra presented by its atoms, with a list of named
// generators. Immutable; cheap to copy (shared handle).
class BoolAlg {
public:
  BoolAlg() = default;

  // Free boolean algebra on the given names: 2^|names| atoms. Atom labels
  // are sign vectors over the names; atoms are ordered lexicographically
  // with +1 before -1, first name most significant.
  static BoolAlg free_boolean(const std::vector<std::string>& names);

  // Power set of an n-element set: atoms are the singletons, and each
  // singleton is also a generator (named a0, a1, ...).
  static BoolAlg power_set(unsigned n);

  bool valid() const { return core_ != nullptr; }
  unsigned atom_count() const;
  const std::vector<std::string>& generator_names() const;
  // sign vector of atom i over the generator names (+1 below generator, -1 below complement)
  const std::vector<int8_t>& atom_label(unsigned i) const;

  Element bottom() const;
  Element top() const;
  Element atom(unsigned i) const;
  Element generator(unsigned j) const;
  Element generator(const std::string& name) const;
  bool has_generator(const std::string& name) const;
  Element from_atom_set(const Bits& atoms) const;
  Element from_atom_indices(std::span<const unsigned> idx) const;

  bool same_as(const BoolAlg& o) const { return core_ == o.core_; }
  bool owns(const Element& e) const;

  nlohmann::json to_json() const;

private:
  friend class Element;
  friend class Quotient;
  friend Subalgebra generated_subalgebra(const BoolAlg&, std::span<const Element>);
  explicit BoolAlg(std::shared_ptr<const Element::Core> core) : core_(std::move(core)) {}
  static BoolAlg make(unsigned n_atoms, std::vector<std::string> names,
                      std::vector<Bits> gens, std::vector<std::vector<int8_t>> labels);

  std::shared_ptr<const Element::Core> core_;
};

Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element complement(const Element& a);
Element difference(const Element& a, const Element& b);  // a ∧ ¬b
bool leq(const Element& a, const Element& b);
bool lt(const Element& a, const Element& b);
bool is_atom(const Element& a);
Element join_all(const BoolAlg& B, std::span<const Element> xs);  // empty -> bottom
Element meet_all(const BoolAlg& B, std::span<const Element> xs);  // empty -> top
unsigned atoms_below(const Element& a);

// Quotient of B by the ideal generated by the given elements. The quotient
// of a finite boolean algebra by the principal ideal below d is isomorphic
// to the interval [0, ~d]; atoms of the quotient are the atoms of B not
// below d, kept in their original order.
class Quotient {
public:
  Quotient(const BoolAlg& base, std::span<const Element> ideal_gens);

  const BoolAlg& base() const { return base_; }
  const BoolAlg& algebra() const { return quot_; }
  // indices (in the base) of the atoms that survive, ascending
  const std::vector<uint32_t>& surviving() const { return surviving_; }
  // the canonical projection hom
  Element project(const Element& x) const;

private:
  BoolAlg base_;
  BoolAlg quot_;
  std::vector<uint32_t> surviving_;
  std::vector<uint32_t> new_index_;  // base atom -> quotient atom, or UINT32_MAX
};

// Subalgebra of B generated by a list of elements: atoms of the subalgebra
// are the blocks of the partition of B's atoms by membership signature.
// atom_images[i] is the element of B corresponding to subalgebra atom i.
struct Subalgebra {
  BoolAlg algebra;
  std::vector<Element> atom_images;
};

}  // namespace cubal
