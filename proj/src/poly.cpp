#include "kfc/poly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace kfc {

LaurentPoly LaurentPoly::monomial(int exp, long long coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

long long LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return c_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = c_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly out;
  for (auto& [e, c] : c_) out.c_.emplace(e + k, c);
  return out;
}

long long LaurentPoly::eval_one() const {
  long long s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (auto& [e, c] : o.c_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (auto& [e, c] : o.c_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

std::map<std::pair<int, int>, long long> LaurentPoly::as_q_poly() const {
  std::map<std::pair<int, int>, long long> out;
  for (auto& [e, c] : c_) {
    if (e % 2 == 0)
      out[{e / 2, 1}] = c;
    else
      out[{e, 2}] = c;
  }
  return out;
}

static void append_term(std::string& s, bool first, long long c, int exp,
                        const char* var, int den) {
  if (c < 0) {
    s += '-';
    c = -c;
  } else if (!first) {
    s += '+';
  }
  bool unit_coeff = (c == 1) && exp != 0;
  if (!unit_coeff) s += std::to_string(c);
  if (exp == 0) return;
  s += var;
  if (den == 2 && exp % 2 != 0) {
    s += '^';
    s += std::to_string(exp);
    s += "/2";
  } else {
    int e = den == 2 ? exp / 2 : exp;
    if (e != 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [e, c] : c_) {
    append_term(s, first, c, e, "v", 1);
    first = false;
  }
  return s;
}

std::string LaurentPoly::to_q_string() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [e, c] : c_) {
    append_term(s, first, c, e, "q", 2);
    first = false;
  }
  return s;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly out;
  size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("bad polynomial: " + text); };
  if (text.empty()) fail();
  if (text == "0") return out;
  while (i < text.size()) {
    long long sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    if (i >= text.size()) fail();
    long long coeff = 1;
    bool saw_digits = false;
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) {
      coeff = std::strtoll(text.substr(i, j - i).c_str(), nullptr, 10);
      saw_digits = true;
      i = j;
    }
    int exp = 0;
    if (i < text.size() && text[i] == 'v') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t k = i;
        if (k < text.size() && text[k] == '-') ++k;
        while (k < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[k])))
          ++k;
        if (k == i) fail();
        exp = static_cast<int>(
            std::strtol(text.substr(i, k - i).c_str(), nullptr, 10));
        i = k;
      }
    } else if (!saw_digits) {
      fail();
    }
    out.add_term(exp, sign * coeff);
  }
  return out;
}

}  // namespace kfc
