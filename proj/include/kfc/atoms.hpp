#pragma once

#include <vector>

#include "kfc/crystal.hpp"

// Atomic decomposition of B(lambda): connected components of the graph whose
// edges are the Weyl-group action together with f_n, and the atomic number
// that is constant on each component.

namespace kfc {

struct Atom {
  std::vector<int> members;  // crystal element indices, ascending
  Weight highest_weight;     // the unique dominant-maximal weight
  int atomic_number2 = 0;    // doubled atomic number of the component
};

// 2*Z(T) = -2<wt(T),rho^vee> + 2 * sum_{beta>0} phi_beta(T).
int atomic_number2(const Crystal& crystal, int t);

class AtomDecomposition {
 public:
  explicit AtomDecomposition(const Crystal& crystal);

  const Crystal& crystal() const { return *crystal_; }
  int count() const { return static_cast<int>(atoms_.size()); }
  const Atom& atom(int a) const { return atoms_[a]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  int atom_index_of(int t) const { return atom_of_[t]; }
  const Atom& atom_of(int t) const { return atoms_[atom_of_[t]]; }

 private:
  const Crystal* crystal_;
  std::vector<int> atom_of_;
  std::vector<Atom> atoms_;
};

}  // namespace kfc
