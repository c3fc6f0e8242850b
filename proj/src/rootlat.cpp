#include "kfc/rootlat.hpp"

#include <algorithm>
#include <numeric>

namespace kfc {

WeylElement WeylElement::identity(int n_plus_1) {
  WeylElement w;
  w.p.resize(n_plus_1);
  std::iota(w.p.begin(), w.p.end(), 0);
  return w;
}

bool WeylElement::is_identity() const {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.p.resize(p.size());
  for (size_t i = 0; i < p.size(); ++i) w.p[p[i]] = static_cast<int>(i);
  return w;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement w;
  w.p.resize(p.size());
  for (size_t i = 0; i < p.size(); ++i) w.p[i] = p[other.p[i]];
  return w;
}

Weight WeylElement::act(const Weight& mu) const {
  Weight out(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) out[p[i]] = mu[i];
  return out;
}

int WeylElement::parity() const {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv & 1;
}

std::vector<int> reduced_word(const WeylElement& w) {
  // Peel descents off the right: if v has v(i) > v(i+1) then v*s_i is
  // shorter, and v = (v*s_i)*s_i.  Collecting the indices in discovery
  // order yields a word to apply front-first.
  std::vector<int> word;
  std::vector<int> v = w.p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  return word;
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  out.reserve(n * (n + 1) / 2);
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) out.emplace_back(lo, hi);
  return out;
}

Root highest_root(int n) { return Root(1, n); }

Weight root_vector(int n, const Root& beta) {
  Weight v(n + 1, 0);
  v[beta.lo - 1] += beta.sign;
  v[beta.hi] -= beta.sign;
  return v;
}

Weight zero_weight(int n) { return Weight(n + 1, 0); }

Weight fundamental_weight(int n, int i) {
  Weight v(n + 1, 0);
  for (int j = 0; j < i; ++j) v[j] = 1;
  return v;
}

int rank_of(const Weight& mu) {
  if (mu.size() < 2) throw std::invalid_argument("weight needs length >= 2");
  return static_cast<int>(mu.size()) - 1;
}

int content_sum(const Weight& mu) {
  return std::accumulate(mu.begin(), mu.end(), 0);
}

bool is_dominant(const Weight& mu) {
  return std::is_sorted(mu.begin(), mu.end(), std::greater<int>());
}

static void check_root(const Weight& mu, const Root& beta) {
  if (beta.lo < 1 || beta.lo > beta.hi ||
      beta.hi + 1 > static_cast<int>(mu.size()))
    throw std::out_of_range("root interval out of range for this rank");
}

int pairing(const Weight& mu, const Root& beta) {
  check_root(mu, beta);
  return beta.sign * (mu[beta.lo - 1] - mu[beta.hi]);
}

int rho_pair2(const Weight& mu) {
  int n = rank_of(mu);
  int out = 0;
  for (int i = 1; i <= n + 1; ++i) out += mu[i - 1] * (n + 2 - 2 * i);
  return out;
}

int length_along(const Weight& mu, const Root& beta) {
  if (beta.sign < 0) throw std::invalid_argument("length_along needs beta > 0");
  int k = pairing(mu, beta);
  return k >= 0 ? k : -k - 1;
}

int length(const Weight& mu) {
  int n = rank_of(mu);
  int out = 0;
  for (const Root& beta : positive_roots(n)) out += length_along(mu, beta);
  return out;
}

std::pair<Weight, WeylElement> dominant_rep(const Weight& mu) {
  size_t m = mu.size();
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return mu[a] > mu[b]; });
  Weight dom(m);
  WeylElement w;
  w.p.resize(m);
  for (size_t j = 0; j < m; ++j) {
    dom[j] = mu[idx[j]];
    w.p[idx[j]] = static_cast<int>(j);  // entry idx[j] moves to slot j
  }
  return {dom, w};
}

bool bruhat_leq(const Weight& mu, const Weight& lambda) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("weights of different rank");
  if (!is_dominant(lambda))
    throw std::invalid_argument("bruhat_leq needs dominant lambda");
  if (content_sum(mu) != content_sum(lambda)) return false;
  Weight dom = dominant_rep(mu).first;
  int partial = 0;
  for (size_t i = 0; i < dom.size(); ++i) {
    partial += lambda[i] - dom[i];
    if (partial < 0) return false;
  }
  return true;
}

Weight reflect(const Weight& mu, const AffineRoot& a) {
  check_root(mu, a.finite_part());
  int t = a.level - pairing(mu, a.finite_part());
  Weight out = mu;
  out[a.lo - 1] += t * a.sign;
  out[a.hi] -= t * a.sign;
  return out;
}

int reflection_compare(const Weight& mu, const AffineRoot& a) {
  int t = a.level - pairing(mu, a.finite_part());
  return (t > 0) - (t < 0);
}

std::optional<AffineRoot> edge_label(const Weight& mu1, const Weight& mu2) {
  if (mu1.size() != mu2.size())
    throw std::invalid_argument("weights of different rank");
  if (content_sum(mu1) != content_sum(mu2))
    throw std::invalid_argument("weights in different sum classes");
  int p = -1, q = -1;
  for (size_t i = 0; i < mu1.size(); ++i) {
    if (mu1[i] == mu2[i]) continue;
    if (p < 0)
      p = static_cast<int>(i);
    else if (q < 0)
      q = static_cast<int>(i);
    else
      return std::nullopt;  // more than two coordinates differ
  }
  if (p < 0 || q < 0) return std::nullopt;  // equal, or not a root multiple
  int k = mu2[p] - mu1[p];
  if (mu2[q] - mu1[q] != -k) return std::nullopt;
  Root beta(p + 1, q);  // positive alpha_{p+1,q}; difference = k*beta
  int s = pairing(mu1, beta) + pairing(mu2, beta);
  // m = -<beta^vee, mu1+mu2>/2 is integral: <beta^vee,mu1+mu2> is even.
  int m = -s / 2;
  return AffineRoot(m, beta.negated()).normalized();
}

long long wall_value(const std::vector<long long>& fund_coeffs, long long d_coeff,
                     const AffineRoot& a) {
  long long out = static_cast<long long>(a.level) * d_coeff;
  for (int i = a.lo; i <= a.hi; ++i) out += a.sign * fund_coeffs.at(i - 1);
  return out;
}

std::vector<Weight> lower_interval(const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("lower_interval needs dominant lambda");
  int n = rank_of(lambda);
  int total = content_sum(lambda);
  int hi = lambda.front(), lo = lambda.back();
  std::vector<Weight> out;
  Weight cur(n + 1, 0);
  // Enumerate content vectors with entries in [lo,hi] and the right sum,
  // in lexicographically decreasing order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n) {
      if (remaining < lo || remaining > hi) return;
      cur[pos] = remaining;
      if (bruhat_leq(cur, lambda)) out.push_back(cur);
      return;
    }
    int maxv = std::min(hi, remaining - lo * (n - pos));
    int minv = std::max(lo, remaining - hi * (n - pos));
    for (int v = maxv; v >= minv; --v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::string weight_key(const Weight& mu) {
  std::string s;
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(mu[i]);
  }
  return s;
}

std::string to_string(const Root& beta) {
  std::string s = beta.sign < 0 ? "-" : "";
  if (beta.lo == beta.hi) return s + "a" + std::to_string(beta.lo);
  return s + "a" + std::to_string(beta.lo) + "." + std::to_string(beta.hi);
}

std::string to_string(const AffineRoot& a) {
  std::string s;
  if (a.level != 0) {
    if (a.level != 1) s += std::to_string(a.level);
    s += "d";
    s += a.sign < 0 ? "-" : "+";
  } else if (a.sign < 0) {
    s += "-";
  }
  if (a.lo == a.hi)
    s += "a" + std::to_string(a.lo) + "v";
  else
    s += "a" + std::to_string(a.lo) + "." + std::to_string(a.hi) + "v";
  return s;
}

}  // namespace kfc
