#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Type A_n root and weight lattice arithmetic.
//
// Weights are GL-style content vectors of length n+1; the SL weight lattice
// is recovered as classes of fixed coordinate sum.  Roots are intervals
// alpha_{j,k} = alpha_j + ... + alpha_k, and affine real roots are stored as
// level*delta + sign*alpha_{j,k}^vee.

namespace kfc {

using Weight = std::vector<int>;

// sign * alpha_{lo,hi} with 1 <= lo <= hi <= n.
struct Root {
  int lo = 1;
  int hi = 1;
  int sign = +1;

  Root() = default;
  Root(int lo_, int hi_, int sign_ = +1) : lo(lo_), hi(hi_), sign(sign_) {}

  Root negated() const { return Root(lo, hi, -sign); }
  bool operator==(const Root& o) const {
    return lo == o.lo && hi == o.hi && sign == o.sign;
  }
};

// level*delta + sign*alpha_{lo,hi}^vee.
// Positive normalization: level > 0, or level == 0 and sign == +1.
struct AffineRoot {
  int level = 0;
  int lo = 1;
  int hi = 1;
  int sign = +1;

  AffineRoot() = default;
  AffineRoot(int level_, const Root& beta)
      : level(level_), lo(beta.lo), hi(beta.hi), sign(beta.sign) {}
  AffineRoot(int level_, int lo_, int hi_, int sign_)
      : level(level_), lo(lo_), hi(hi_), sign(sign_) {}

  Root finite_part() const { return Root(lo, hi, sign); }
  bool is_positive() const { return level > 0 || (level == 0 && sign > 0); }
  AffineRoot normalized() const {
    if (level < 0 || (level == 0 && sign < 0))
      return AffineRoot(-level, lo, hi, -sign);
    return *this;
  }
  bool operator==(const AffineRoot& o) const {
    return level == o.level && lo == o.lo && hi == o.hi && sign == o.sign;
  }
};

// Permutation of {1,...,n+1}; p[i] = w(i+1)-1 in 0-based storage.
// Acts on a weight by permuting content entries: (w.mu)[w(i)] = mu[i].
struct WeylElement {
  std::vector<int> p;

  static WeylElement identity(int n_plus_1);
  bool is_identity() const;
  WeylElement inverse() const;
  // this * other (apply other first).
  WeylElement compose(const WeylElement& other) const;
  Weight act(const Weight& mu) const;
  int parity() const;  // 0 even, 1 odd
};

// w written as a product of simple reflections; apply front() first.
std::vector<int> reduced_word(const WeylElement& w);

std::vector<Root> positive_roots(int n);
Root highest_root(int n);
Weight root_vector(int n, const Root& beta);  // beta as a content vector
Weight zero_weight(int n);
Weight fundamental_weight(int n, int i);

int rank_of(const Weight& mu);  // n = size-1, size >= 2 enforced
int content_sum(const Weight& mu);
bool is_dominant(const Weight& mu);

// <mu, beta^vee> = sign * (mu_lo - mu_{hi+1}).
int pairing(const Weight& mu, const Root& beta);

// 2<mu, rho^vee> = sum_i mu_i (n+2-2i); always an integer.
int rho_pair2(const Weight& mu);

// l^beta(mu): <mu,beta^vee> if >= 0, else -<mu,beta^vee>-1.  beta positive.
int length_along(const Weight& mu, const Root& beta);

// l(mu) = sum over positive beta of l^beta(mu).
int length(const Weight& mu);

// Sorted-descending content vector together with a permutation w such that
// w.act(mu) is the dominant representative.
std::pair<Weight, WeylElement> dominant_rep(const Weight& mu);

// Bruhat order on X against a dominant lambda: dominance of the dominant
// representative.  Throws if lambda is not dominant or sums differ.
bool bruhat_leq(const Weight& mu, const Weight& lambda);

// Affine reflection s_a(mu) = mu + (level - <gamma^vee,mu>) gamma,
// gamma = sign*alpha_{lo,hi}.  An involution.
Weight reflect(const Weight& mu, const AffineRoot& a);

// -1 if s_a(mu) < mu in the Bruhat order on X, 0 if fixed, +1 if s_a(mu) > mu.
// (s_{m delta + gamma^vee}(mu) < mu iff <gamma^vee,mu> > m.)
int reflection_compare(const Weight& mu, const AffineRoot& a);

// Moment-graph edge label: if mu2-mu1 is a nonzero multiple of a root beta,
// the positive representative of m*delta - beta^vee with
// m = -<beta^vee, mu1+mu2>/2; otherwise nullopt.
std::optional<AffineRoot> edge_label(const Weight& mu1, const Weight& mu2);

// <eta, a> for eta = sum_i A_i varpi_i + C d given by coefficients
// (A_1..A_n, C): level*C + sign * sum_{lo<=i<=hi} A_i.
long long wall_value(const std::vector<long long>& fund_coeffs, long long d_coeff,
                     const AffineRoot& a);

// All weights mu <= lambda (lambda dominant), in canonical order
// (lexicographically decreasing content).
std::vector<Weight> lower_interval(const Weight& lambda);

std::string weight_key(const Weight& mu);
std::string to_string(const Root& beta);
std::string to_string(const AffineRoot& a);

}  // namespace kfc
