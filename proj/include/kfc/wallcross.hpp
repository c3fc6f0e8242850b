#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kfc/atoms.hpp"
#include "kfc/crystal.hpp"
#include "kfc/poly.hpp"
#include "kfc/rootlat.hpp"

// Moment graphs on lower Bruhat intervals of the weight lattice, twisted
// orientations indexed by uncrossed walls, the in-degree statistic, and the
// wall-crossing engine that evolves the per-element recharge ledger from the
// multiplicity chamber to the Kazhdan-Lusztig chamber.

namespace kfc {

struct MomentGraph {
  int n = 0;
  Weight lambda;                  // dominant
  std::vector<Weight> vertices;   // canonical order (lex decreasing)
  std::vector<int> in_degree;     // untwisted; equals length(vertex)
  struct Edge {
    int src, dst;                 // src < dst in the Bruhat order
    AffineRoot label;
  };
  std::vector<Edge> edges;

  int vertex_index(const Weight& mu) const;  // -1 if absent

 private:
  friend MomentGraph moment_graph(int, const Weight&);
  std::unordered_map<std::string, int> vidx_;
};

MomentGraph moment_graph(int n, const Weight& lambda);

// The walls separating the parabolic region from the KL chamber, restricted
// to labels occurring in the graph: c*delta - alpha_{k,n}^vee, in crossing
// order (level descending, then k from n down to 1).
std::vector<AffineRoot> wall_sequence(const MomentGraph& graph);

// In-degrees after reversing every edge whose label lies in `reversed`.
std::vector<int> twisted_indegrees(
    const MomentGraph& graph,
    const std::vector<AffineRoot>& reversed);

// First m inversions of the infinite word (s_0 s_1 ... s_n)^infinity,
// computed by successive reflection; cross-checks the wall order.
std::vector<AffineRoot> coxeter_word_inversions(int n, int m);

// Crossing times of the wall family along eta(t) = eta_P + t*d, for a
// parabolic cocharacter given by fundamental-coweight coefficients and the
// d-coefficient; returns walls sorted by increasing crossing time.
std::vector<AffineRoot> walls_by_crossing_time(
    const std::vector<AffineRoot>& walls,
    const std::vector<long long>& fund_coeffs, long long d_coeff);

struct StepReport {
  int m = 0;                     // walls remaining after this crossing
  AffineRoot wall;
  bool swap_ok = true;           // swapping-function contract
  bool arr_identity_ok = true;   // recharge equals Z - Arr_m element-wise
  bool recurrence_ok = true;     // wall-crossing recurrence on eta-KL polys
  bool gammam_ok = true;         // off-by-one in-degree identity
  std::vector<std::string> failures;

  bool ok() const {
    return swap_ok && arr_identity_ok && recurrence_ok && gammam_ok;
  }
};

class WallCrossEngine {
 public:
  WallCrossEngine(const Crystal& crystal, const AtomDecomposition& atoms);

  // Global wall list (from the full crystal's highest weight), crossing order.
  const std::vector<AffineRoot>& walls() const { return walls_; }
  const MomentGraph& graph() const { return graph_; }

  // State management.  States run: MV -> parabolic (m = M) -> ... -> m = 0.
  void init_mv();
  void init_parabolic();  // throws if the two defining formulas disagree
  bool at_mv() const { return state_ == State::kMv; }
  int walls_remaining() const;
  bool done() const { return state_ == State::kEngine && crossed_ == size_m(); }

  // Cross the next wall; returns the verification report for the step.
  StepReport cross_next();

  // Renormalized graded dimensions of the current state.
  LaurentPoly eta_kl(const Weight& mu) const;
  std::map<Weight, LaurentPoly> eta_kl_all() const;
  // At m = 0 this is the KL polynomial v^{l(mu)} * eta_kl(mu).
  LaurentPoly kl_poly(const Weight& mu) const;

  int recharge2(int t) const { return r2_[t]; }

  // Stand-alone identity check on a graph: for every mu < t*mu <= lambda the
  // twisted in-degree of mu is one less than that of t*mu.  `reversed` holds
  // the uncrossed walls.  Failures are appended to `failures`.
  static bool check_gammam(const MomentGraph& graph,
                           const std::vector<AffineRoot>& reversed,
                           const AffineRoot& wall,
                           std::vector<std::string>* failures);

 private:
  enum class State { kUnset, kMv, kEngine };

  struct AtomGraph {
    MomentGraph graph;
    std::vector<int> wall_pos;     // for each edge: crossing-order index of
                                   // its label in walls_, or -1
    std::vector<int> vertex_of;    // atom member -> vertex index
  };

  int size_m() const { return static_cast<int>(walls_.size()); }
  std::vector<int> atom_arr(const AtomGraph& ag, int crossed) const;
  void check_arr_identity(StepReport& report) const;

  const Crystal* crystal_;
  const AtomDecomposition* atoms_;
  MomentGraph graph_;
  std::vector<AffineRoot> walls_;
  std::vector<AtomGraph> atom_graphs_;
  std::vector<int> r2_;
  State state_ = State::kUnset;
  int crossed_ = 0;  // walls crossed so far (engine state m = M - crossed_)
};

}  // namespace kfc
