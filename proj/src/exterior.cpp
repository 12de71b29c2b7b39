#include "quatcoh/exterior.hpp"

#include <bit>

#include "quatcoh/errors.hpp"

namespace quatcoh {

int popcount(Mask m) { return std::popcount(m); }

Form Form::monomial(Mask m, const GaussianRational& c) {
  Form f;
  f.add(m, c);
  return f;
}

GaussianRational Form::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void Form::add(Mask m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form Form::operator+(const Form& o) const {
  Form out = *this;
  out += o;
  return out;
}

Form Form::operator-() const { return *this * GaussianRational(-1); }

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator*(const GaussianRational& s) const {
  Form out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Form Form::conj_coeffs() const {
  Form out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

int wedge_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  // Count pairs (x in a, y in b) with x > y: each is one transposition.
  int inversions = 0;
  Mask rest = b;
  while (rest != 0) {
    const int y = std::countr_zero(rest);
    rest &= rest - 1;
    const Mask above = y == 63 ? 0 : (~Mask{0} << (y + 1));
    inversions += std::popcount(a & above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Form wedge(const Form& f, const Form& g) {
  Form out;
  for (const auto& [ma, ca] : f.terms()) {
    for (const auto& [mb, cb] : g.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      GaussianRational c = ca * cb;
      if (s < 0) c = -c;
      out.add(ma | mb, c);
    }
  }
  return out;
}

Form wedge_all(const std::vector<Form>& factors) {
  Form acc = Form::constant(GaussianRational(1));
  for (const auto& f : factors) acc = wedge(acc, f);
  return acc;
}

ExteriorAlgebra::ExteriorAlgebra(int generators, std::vector<Form> d_generators)
    : n_(generators), dgen_(std::move(d_generators)) {
  if (n_ < 0 || n_ > 64) throw DimensionMismatch("exterior algebra supports at most 64 generators");
  if (dgen_.size() != static_cast<std::size_t>(n_)) throw DimensionMismatch("one differential per generator required");
}

Form ExteriorAlgebra::d(const Form& f) const {
  Form out;
  for (const auto& [m, c] : f.terms()) {
    // d(g1∧…∧gp) = Σ_k (−1)^{k−1} g1∧…∧dg_k∧…∧gp
    Mask rest = m;
    int k = 0;
    while (rest != 0) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      const Mask below = m & ((Mask{1} << a) - 1);
      const Mask above = m & ~((Mask{1} << a) | ((Mask{1} << a) - 1));
      Form piece = wedge(wedge(Form::monomial(below), dgen_.at(static_cast<std::size_t>(a))), Form::monomial(above));
      GaussianRational coef = c;
      if (k % 2 == 1) coef = -coef;
      out += piece * coef;
      ++k;
    }
  }
  return out;
}

Form ExteriorAlgebra::multiplicative(const std::vector<Form>& images, const Form& f) {
  Form out;
  for (const auto& [m, c] : f.terms()) {
    Form acc = Form::constant(c);
    Mask rest = m;
    while (rest != 0) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      acc = wedge(acc, images.at(static_cast<std::size_t>(a)));
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

Form one_form(const Vector& row) {
  Form f;
  for (std::size_t a = 0; a < row.size(); ++a) f.add(Mask{1} << a, row[a]);
  return f;
}

std::vector<Mask> combinations(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
  while (true) {
    Mask m = 0;
    for (int j : idx) m |= Mask{1} << j;
    out.push_back(m);
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int l = j + 1; l < k; ++l) idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
  }
  return out;
}

std::string format_form(const Form& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string mono;
    Mask rest = m;
    while (rest != 0) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      mono += (mono.empty() ? "" : "∧") + names.at(static_cast<std::size_t>(a));
    }
    std::string coef = c.to_string();
    if (!c.is_real() && !(sgn(c.re()) == 0)) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (c.is_one()) {
      term = mono;
    } else if (c == GaussianRational(-1)) {
      term = "-" + mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace quatcoh
