#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "kfc/rootlat.hpp"

// The type-A crystal B(lambda) on semistandard Young tableaux: operators
// e_i/f_i by the signature rule, string statistics, the Weyl group action by
// string reversal, and the operators e_beta/f_beta attached to arbitrary
// positive roots by conjugation.

namespace kfc {

struct Tableau {
  std::vector<std::vector<int>> rows;  // entries in 1..n+1

  bool is_semistandard(int n) const;
  Weight content(int n) const;
  // Row-concatenated entry list, first row first ("1,1|2").
  std::string encoding() const;
};

class Crystal {
 public:
  // lambda: partition with at most n+1 parts (padded with zeros).
  Crystal(int n, std::vector<int> lambda);

  int rank() const { return n_; }
  const std::vector<int>& shape() const { return shape_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int highest() const { return highest_; }
  const Tableau& element(int t) const { return elems_[t]; }
  const Weight& weight(int t) const { return wt_[t]; }
  int index_of(const Tableau& tab) const;  // -1 if absent

  // Crystal operators; -1 encodes the zero of the crystal.
  int f(int i, int t) const { return f_[i - 1][t]; }
  int e(int i, int t) const { return e_[i - 1][t]; }
  int phi(int i, int t) const;
  int eps(int i, int t) const;

  // Simple-reflection action: reverse the i-string through t.  Involution.
  int s_act(int i, int t) const;
  // Apply w along a reduced word; word-independent.
  int w_act(const WeylElement& w, int t) const;
  int word_act(const std::vector<int>& word, int t) const;  // front first

  // Modified operators for beta = alpha_{j,k}: w f_k w^{-1} with
  // w = s_j s_{j+1} ... s_{k-1}.  -1 propagates.
  int f_root(const Root& beta, int t) const;
  int e_root(const Root& beta, int t) const;
  int phi_root(const Root& beta, int t) const;
  int eps_root(const Root& beta, int t) const;

  // Elements of weight mu, in element order.
  std::vector<int> weight_space(const Weight& mu) const;
  const std::vector<Weight>& weights_present() const { return weights_present_; }

 private:
  int conjugator_dest(const Root& beta, int t) const;  // w^{-1} applied to t

  int n_;
  std::vector<int> shape_;
  std::vector<Tableau> elems_;
  std::vector<Weight> wt_;
  std::vector<std::vector<int>> f_, e_;  // [i-1][t]
  int highest_ = -1;
  std::unordered_map<std::string, int> index_;
  std::unordered_map<std::string, std::vector<int>> by_weight_;
  std::vector<Weight> weights_present_;
};

// Raw signature-rule operators on tableaux (used by the builder and tests).
// Reading word: rows bottom to top, each row left to right; i is marked "+",
// i+1 is marked "-", a "-" cancels the nearest uncancelled "+" to its right;
// f raises the rightmost uncancelled "+", e lowers the leftmost "-".
bool tableau_f(const Tableau& in, int i, int n, Tableau& out);
bool tableau_e(const Tableau& in, int i, int n, Tableau& out);

// All semistandard tableaux of the given shape with entries <= n+1,
// sorted by encoding.
std::vector<Tableau> enumerate_ssyt(int n, const std::vector<int>& lambda);

// Dominant weight (content vector) of a partition padded to length n+1.
Weight partition_weight(int n, const std::vector<int>& lambda);

}  // namespace kfc
