#include "kfc/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfc {

bool Tableau::is_semistandard(int n) const {
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v < 1 || v > n + 1) return false;
      if (c + 1 < rows[r].size() && rows[r][c + 1] < v) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() &&
          rows[r + 1][c] <= v)
        return false;
    }
  }
  return true;
}

Weight Tableau::content(int n) const {
  Weight mu(n + 1, 0);
  for (auto& row : rows)
    for (int v : row) ++mu[v - 1];
  return mu;
}

std::string Tableau::encoding() const {
  std::string s;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) s.push_back('|');
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s.push_back(',');
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

namespace {

struct WordPos {
  int row, col;
};

// Reading word: rows bottom to top, left to right inside each row.
std::vector<WordPos> reading_order(const Tableau& tab) {
  std::vector<WordPos> out;
  for (int r = static_cast<int>(tab.rows.size()) - 1; r >= 0; --r)
    for (size_t c = 0; c < tab.rows[r].size(); ++c)
      out.push_back({r, static_cast<int>(c)});
  return out;
}

// Matching: scanning left to right, each "+" closes the nearest open "-";
// equivalently every "-" cancels against the nearest uncancelled "+" to its
// right.  Returns the surviving "+" cells (left to right) and "-" cells.
void signature_scan(const Tableau& tab, int i,
                    std::vector<WordPos>& plus_left,
                    std::vector<WordPos>& minus_left) {
  plus_left.clear();
  minus_left.clear();
  for (const WordPos& wp : reading_order(tab)) {
    int v = tab.rows[wp.row][wp.col];
    if (v == i) {
      if (!minus_left.empty())
        minus_left.pop_back();  // this "+" cancels the nearest open "-"
      else
        plus_left.push_back(wp);
    } else if (v == i + 1) {
      minus_left.push_back(wp);
    }
  }
}

}  // namespace

bool tableau_f(const Tableau& in, int i, int n, Tableau& out) {
  std::vector<WordPos> plus, minus;
  signature_scan(in, i, plus, minus);
  if (plus.empty()) return false;
  out = in;
  const WordPos& wp = plus.back();  // rightmost uncancelled "+"
  out.rows[wp.row][wp.col] = i + 1;
  (void)n;
  return true;
}

bool tableau_e(const Tableau& in, int i, int n, Tableau& out) {
  std::vector<WordPos> plus, minus;
  signature_scan(in, i, plus, minus);
  if (minus.empty()) return false;
  out = in;
  const WordPos& wp = minus.front();  // leftmost uncancelled "-"
  out.rows[wp.row][wp.col] = i;
  (void)n;
  return true;
}

std::vector<Tableau> enumerate_ssyt(int n, const std::vector<int>& lambda) {
  std::vector<int> shape;
  for (int part : lambda)
    if (part > 0) shape.push_back(part);
  if (!std::is_sorted(shape.begin(), shape.end(), std::greater<int>()))
    throw std::invalid_argument("lambda is not a partition");
  if (static_cast<int>(shape.size()) > n + 1)
    throw std::invalid_argument("partition has more than n+1 parts");

  std::vector<Tableau> out;
  Tableau cur;
  cur.rows.resize(shape.size());
  for (size_t r = 0; r < shape.size(); ++r) cur.rows[r].assign(shape[r], 0);

  auto rec = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == shape.size()) {
      out.push_back(cur);
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == cur.rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cur.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, cur.rows[r - 1][c] + 1);
    for (int v = lo; v <= n + 1; ++v) {
      cur.rows[r][c] = v;
      self(self, nr, nc);
    }
  };
  if (shape.empty())
    out.push_back(cur);
  else
    rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.encoding() < b.encoding();
  });
  return out;
}

Weight partition_weight(int n, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) > n + 1)
    throw std::invalid_argument("partition has more than n+1 parts");
  Weight mu(n + 1, 0);
  for (size_t i = 0; i < lambda.size(); ++i) mu[i] = lambda[i];
  if (!is_dominant(mu)) throw std::invalid_argument("lambda is not a partition");
  return mu;
}

Crystal::Crystal(int n, std::vector<int> lambda) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  Weight lw = partition_weight(n, lambda);
  shape_.assign(lw.begin(), lw.end());

  elems_ = enumerate_ssyt(n, lambda);
  int m = size();
  wt_.resize(m);
  for (int t = 0; t < m; ++t) {
    wt_[t] = elems_[t].content(n);
    index_.emplace(elems_[t].encoding(), t);
    by_weight_[weight_key(wt_[t])].push_back(t);
  }
  for (auto& [key, ts] : by_weight_) {
    (void)key;
    weights_present_.push_back(wt_[ts.front()]);
  }
  std::sort(weights_present_.begin(), weights_present_.end(),
            [](const Weight& a, const Weight& b) { return a > b; });

  f_.assign(n, std::vector<int>(m, -1));
  e_.assign(n, std::vector<int>(m, -1));
  Tableau img;
  for (int t = 0; t < m; ++t) {
    for (int i = 1; i <= n; ++i) {
      if (tableau_f(elems_[t], i, n, img)) {
        auto it = index_.find(img.encoding());
        if (it == index_.end())
          throw std::logic_error("f left the tableau set");
        f_[i - 1][t] = it->second;
      }
      if (tableau_e(elems_[t], i, n, img)) {
        auto it = index_.find(img.encoding());
        if (it == index_.end())
          throw std::logic_error("e left the tableau set");
        e_[i - 1][t] = it->second;
      }
    }
  }

  for (int t = 0; t < m; ++t) {
    bool top = true;
    for (int i = 1; i <= n && top; ++i)
      if (e_[i - 1][t] != -1) top = false;
    if (top) {
      if (highest_ != -1)
        throw std::logic_error("crystal has two sources");
      highest_ = t;
    }
  }
  if (highest_ == -1) throw std::logic_error("crystal has no source");
  if (!(wt_[highest_] == lw))
    throw std::logic_error("source weight differs from lambda");
}

int Crystal::index_of(const Tableau& tab) const {
  auto it = index_.find(tab.encoding());
  return it == index_.end() ? -1 : it->second;
}

int Crystal::phi(int i, int t) const {
  int k = 0;
  for (int cur = f(i, t); cur != -1; cur = f(i, cur)) ++k;
  return k;
}

int Crystal::eps(int i, int t) const {
  int k = 0;
  for (int cur = e(i, t); cur != -1; cur = e(i, cur)) ++k;
  return k;
}

int Crystal::s_act(int i, int t) const {
  int k = pairing(wt_[t], Root(i, i));
  int cur = t;
  if (k >= 0)
    for (int j = 0; j < k; ++j) cur = f(i, cur);
  else
    for (int j = 0; j < -k; ++j) cur = e(i, cur);
  if (cur == -1) throw std::logic_error("string reversal fell off a string");
  return cur;
}

int Crystal::word_act(const std::vector<int>& word, int t) const {
  int cur = t;
  for (int i : word) cur = s_act(i, cur);
  return cur;
}

int Crystal::w_act(const WeylElement& w, int t) const {
  return word_act(reduced_word(w), t);
}

int Crystal::conjugator_dest(const Root& beta, int t) const {
  // Apply w^{-1} = s_{k-1} ... s_j (rightmost factor first).
  int cur = t;
  for (int i = beta.lo; i <= beta.hi - 1; ++i) cur = s_act(i, cur);
  return cur;
}

int Crystal::f_root(const Root& beta, int t) const {
  if (beta.sign < 0) throw std::invalid_argument("f_root needs beta > 0");
  int down = conjugator_dest(beta, t);
  int img = f(beta.hi, down);
  if (img == -1) return -1;
  for (int i = beta.hi - 1; i >= beta.lo; --i) img = s_act(i, img);
  return img;
}

int Crystal::e_root(const Root& beta, int t) const {
  if (beta.sign < 0) throw std::invalid_argument("e_root needs beta > 0");
  int down = conjugator_dest(beta, t);
  int img = e(beta.hi, down);
  if (img == -1) return -1;
  for (int i = beta.hi - 1; i >= beta.lo; --i) img = s_act(i, img);
  return img;
}

int Crystal::phi_root(const Root& beta, int t) const {
  if (beta.sign < 0) throw std::invalid_argument("phi_root needs beta > 0");
  return phi(beta.hi, conjugator_dest(beta, t));
}

int Crystal::eps_root(const Root& beta, int t) const {
  if (beta.sign < 0) throw std::invalid_argument("eps_root needs beta > 0");
  return eps(beta.hi, conjugator_dest(beta, t));
}

std::vector<int> Crystal::weight_space(const Weight& mu) const {
  auto it = by_weight_.find(weight_key(mu));
  if (it == by_weight_.end()) return {};
  return it->second;
}

}  // namespace kfc
