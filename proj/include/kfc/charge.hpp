#pragma once

#include <vector>

#include "kfc/atoms.hpp"
#include "kfc/crystal.hpp"
#include "kfc/poly.hpp"

// The charge statistic, Kostka-Foulkes polynomials and the expansion of the
// Kazhdan-Lusztig basis element in the N-basis, plus two independent
// referees: the symmetrized tableau-statistic charge and Lusztig's q-analog
// of the weight multiplicity via the q-Kostant partition function.

namespace kfc {

// 2*c(T) = 2*Z(T) - l(wt(T)).
int charge2(const Crystal& crystal, int t);

// K_{lambda,mu}(q) as a polynomial in v (q = v^2): sum of v^{2c(T)} over the
// weight-mu elements.  Requires mu dominant and mu <= lambda.
LaurentPoly kostka_foulkes(const Crystal& crystal, const Weight& mu);
LaurentPoly kostka_foulkes(int n, const std::vector<int>& lambda,
                           const Weight& mu);

// 2*gamma_n(T): the (n+1)!-averaged sum over the Weyl group of
// sum_i i*min(eps_i, phi_i), accumulated exactly; throws if the division
// is not exact.
int llt_charge2(const Crystal& crystal, int t);

// Lusztig's q-analog: sum over w in W of (-1)^{l(w)} P_q(w(lambda+rho) -
// (mu+rho)) with P_q the q-Kostant partition function, returned in v.
// Shares no code with the crystal construction.
LaurentPoly kostant_oracle(int n, const std::vector<int>& lambda,
                           const Weight& mu);

struct BasisExpansion {
  struct Term {
    Weight weight;      // dominant
    int v_exponent;     // nonnegative even
  };
  std::vector<Term> terms;  // one per atom, canonical atom order
};

// One term per atom: (highest weight, 2Z(atom) - 2<highest,rho^vee>).
// Throws if an exponent is negative or odd.
BasisExpansion kl_in_n_basis(const AtomDecomposition& atoms);

// Number of semistandard tableaux of shape lambda and content mu by direct
// enumeration; the specialization referee for kostka_foulkes.
long long ssyt_count(int n, const std::vector<int>& lambda, const Weight& mu);

std::vector<Weight> dominant_weights_below(const Weight& lambda);

}  // namespace kfc
