#include "kfc/charge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kfc {

int charge2(const Crystal& crystal, int t) {
  return atomic_number2(crystal, t) - length(crystal.weight(t));
}

LaurentPoly kostka_foulkes(const Crystal& crystal, const Weight& mu) {
  if (!is_dominant(mu))
    throw std::invalid_argument("kostka_foulkes needs dominant mu");
  Weight lambda = crystal.weight(crystal.highest());
  if (!bruhat_leq(mu, lambda))
    throw std::invalid_argument("kostka_foulkes needs mu <= lambda");
  LaurentPoly out;
  for (int t : crystal.weight_space(mu)) out.add_term(charge2(crystal, t), 1);
  return out;
}

LaurentPoly kostka_foulkes(int n, const std::vector<int>& lambda,
                           const Weight& mu) {
  Crystal crystal(n, lambda);
  return kostka_foulkes(crystal, mu);
}

int llt_charge2(const Crystal& crystal, int t) {
  int n = crystal.rank();
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    WeylElement w{perm};
    int img = crystal.w_act(w, t);
    for (int i = 1; i <= n; ++i)
      total += static_cast<long long>(i) *
               std::min(crystal.eps(i, img), crystal.phi(i, img));
  } while (std::next_permutation(perm.begin(), perm.end()));
  long long fact = 1;
  for (int i = 2; i <= n + 1; ++i) fact *= i;
  long long doubled = 2 * total;
  if (doubled % fact != 0)
    throw std::logic_error("symmetrized charge sum is not divisible by |W|");
  return static_cast<int>(doubled / fact);
}

namespace {

// q-Kostant partition function.  A sum-zero vector nu is a nonnegative
// combination of positive roots iff all its prefix sums are nonnegative, and
// the prefix sums (p_1..p_n) determine nu; removing a root e_j - e_{k+1}
// lowers exactly the prefixes j..k by one.  The table is a dense DP over the
// prefix-sum box [0,cap_1] x ... x [0,cap_n], one unbounded-knapsack sweep
// per positive root, coefficients indexed by the q-power.
class QKostantTable {
 public:
  QKostantTable(int n, std::vector<int> caps) : n_(n), caps_(std::move(caps)) {
    long long cells = 1;
    strides_.assign(n_, 0);
    for (int i = n_ - 1; i >= 0; --i) {
      strides_[i] = cells;
      cells *= caps_[i] + 1;
    }
    table_.assign(static_cast<size_t>(cells), {});
    table_[0] = {1};

    for (int j = 1; j <= n_; ++j) {
      for (int k = j; k <= n_; ++k) {
        // Ascending lexicographic sweep keeps cell - root already complete.
        std::vector<int> p(n_, 0);
        for (size_t idx = 0; idx < table_.size(); ++idx) {
          bool ok = true;
          for (int c = j - 1; c < k && ok; ++c) ok = p[c] >= 1;
          if (ok) {
            size_t prev = idx;
            for (int c = j - 1; c < k; ++c) prev -= strides_[c];
            accumulate_shifted(table_[idx], table_[prev]);
          }
          int c = n_ - 1;
          while (c >= 0 && p[c] == caps_[c]) p[c--] = 0;
          if (c < 0) break;
          ++p[c];
        }
      }
    }
  }

  // P_q(nu); zero when nu is not a nonnegative root combination.
  std::vector<long long> lookup(const std::vector<int>& nu) const {
    long long idx = 0, run = 0;
    for (int c = 0; c < n_; ++c) {
      run += nu[c];
      if (run < 0 || run > caps_[c]) return {};
      idx += run * strides_[c];
    }
    if (run + nu[n_] != 0) return {};
    return table_[static_cast<size_t>(idx)];
  }

 private:
  static void accumulate_shifted(std::vector<long long>& dst,
                                 const std::vector<long long>& src) {
    if (src.empty()) return;
    if (dst.size() < src.size() + 1) dst.resize(src.size() + 1, 0);
    for (size_t k = 0; k < src.size(); ++k) dst[k + 1] += src[k];
  }

  int n_;
  std::vector<int> caps_;
  std::vector<long long> strides_;
  std::vector<std::vector<long long>> table_;
};

}  // namespace

LaurentPoly kostant_oracle(int n, const std::vector<int>& lambda,
                           const Weight& mu) {
  Weight lw = partition_weight(n, lambda);
  if (!is_dominant(mu))
    throw std::invalid_argument("kostant_oracle needs dominant mu");
  if (content_sum(mu) != content_sum(lw))
    throw std::invalid_argument("mu in a different sum class");

  std::vector<int> rho(n + 1);
  for (int i = 0; i <= n; ++i) rho[i] = n - i;
  std::vector<int> lrho(n + 1);
  for (int i = 0; i <= n; ++i) lrho[i] = lw[i] + rho[i];

  // Every queried nu = w(lambda+rho) - (mu+rho) has prefix sums bounded by
  // the sorted-descending prefixes of lambda+rho (mu+rho has nonnegative
  // prefixes since mu is a dominant weight with nonnegative entries).
  std::vector<int> sorted = lrho;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  std::vector<int> caps(n, 0);
  int run = 0;
  for (int c = 0; c < n; ++c) {
    run += sorted[c];
    caps[c] = run;
  }
  QKostantTable table(n, caps);

  LaurentPoly out;
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    WeylElement w{perm};
    Weight moved = w.act(lrho);
    std::vector<int> nu(n + 1);
    for (int i = 0; i <= n; ++i) nu[i] = moved[i] - mu[i] - rho[i];
    std::vector<long long> part = table.lookup(nu);
    long long sign = w.parity() ? -1 : 1;
    for (size_t k = 0; k < part.size(); ++k)
      if (part[k] != 0) out.add_term(2 * static_cast<int>(k), sign * part[k]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BasisExpansion kl_in_n_basis(const AtomDecomposition& atoms) {
  BasisExpansion out;
  for (const Atom& atom : atoms.atoms()) {
    int exp = atom.atomic_number2 - rho_pair2(atom.highest_weight);
    if (exp < 0 || exp % 2 != 0)
      throw std::logic_error("N-basis exponent is negative or odd");
    out.terms.push_back({atom.highest_weight, exp});
  }
  return out;
}

long long ssyt_count(int n, const std::vector<int>& lambda, const Weight& mu) {
  long long count = 0;
  for (const Tableau& tab : enumerate_ssyt(n, lambda))
    if (tab.content(n) == mu) ++count;
  return count;
}

std::vector<Weight> dominant_weights_below(const Weight& lambda) {
  std::vector<Weight> out;
  for (const Weight& mu : lower_interval(lambda))
    if (is_dominant(mu)) out.push_back(mu);
  return out;
}

}  // namespace kfc
