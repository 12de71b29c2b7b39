#include "quatcoh/param_expr.hpp"

#include <algorithm>
#include <cctype>

#include "quatcoh/errors.hpp"

namespace quatcoh {

Polynomial Polynomial::constant(std::size_t nvars, const GaussianRational& c) {
  Polynomial p;
  p.nvars_ = nvars;
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p;
  p.nvars_ = nvars;
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, GaussianRational(1));
  return p;
}

void Polynomial::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  r.nvars_ = nvars_;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(r.nvars_, 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

GaussianRational Polynomial::evaluate(const std::vector<Rational>& point) const {
  GaussianRational total;
  for (const auto& [e, c] : terms_) {
    Rational m = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int p = 0; p < e[k]; ++p) m *= point.at(k);
    }
    total += c * GaussianRational(m);
  }
  return total;
}

std::vector<std::size_t> Polynomial::used_variables() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) used[k] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < used.size(); ++k) {
    if (used[k]) out.push_back(k);
  }
  return out;
}

ParamExpr::ParamExpr(std::vector<std::string> params, Polynomial num, Polynomial den)
    : params_(std::move(params)), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("parameter expression with identically zero denominator");
}

ParamExpr ParamExpr::constant(std::vector<std::string> params, const GaussianRational& c) {
  const std::size_t n = params.size();
  return {std::move(params), Polynomial::constant(n, c), Polynomial::constant(n, GaussianRational(1))};
}

ParamExpr ParamExpr::operator+(const ParamExpr& o) const {
  if (den_.terms() == o.den_.terms()) return {params_, num_ + o.num_, den_};
  return {params_, num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

ParamExpr ParamExpr::operator-(const ParamExpr& o) const { return *this + (-o); }

ParamExpr ParamExpr::operator*(const ParamExpr& o) const { return {params_, num_ * o.num_, den_ * o.den_}; }

ParamExpr ParamExpr::operator/(const ParamExpr& o) const {
  if (o.num_.is_zero()) throw DivisionByZero("division by an identically zero expression");
  return {params_, num_ * o.den_, den_ * o.num_};
}

ParamExpr ParamExpr::operator-() const { return {params_, -num_, den_}; }

bool ParamExpr::is_constant() const { return num_.used_variables().empty() && den_.used_variables().empty(); }

GaussianRational ParamExpr::evaluate(const Bindings& bindings) const {
  std::vector<Rational> point(params_.size(), Rational(0));
  auto used = num_.used_variables();
  for (auto k : den_.used_variables()) used.push_back(k);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto k : used) {
    auto it = bindings.find(params_[k]);
    if (it == bindings.end()) {
      throw UnboundParameter("parameter " + params_[k] + " requires --param");
    }
    point[k] = it->second;
  }
  const GaussianRational den = den_.evaluate(point);
  if (den.is_zero()) {
    std::string where;
    for (auto k : used) where += (where.empty() ? "" : ", ") + params_[k] + "=" + point[k].get_str();
    throw PoleAtBinding("expression '" + source_ + "' has a pole at " + where);
  }
  return num_.evaluate(point) / den;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& params) : text_(text), params_(params) {}

  ParamExpr run() {
    ParamExpr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw CoefficientParseError("cannot parse coefficient '" + std::string(text_) + "' at column " +
                                std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamExpr sum() {
    ParamExpr acc = product();
    while (true) {
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  ParamExpr product() {
    ParamExpr acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        ParamExpr rhs = unary();
        if (rhs.numerator().is_zero()) fail("division by zero");
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  ParamExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  ParamExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamExpr e = sum();
      if (!accept(')')) fail("missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return ParamExpr::constant(params_, GaussianRational(Rational(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return ParamExpr::constant(params_, GaussianRational::i());
      auto it = std::find(params_.begin(), params_.end(), name);
      if (it == params_.end()) fail("unknown parameter '" + name + "'");
      const auto index = static_cast<std::size_t>(it - params_.begin());
      return {params_, Polynomial::variable(params_.size(), index),
              Polynomial::constant(params_.size(), GaussianRational(1))};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamExpr ParamExpr::parse(std::string_view text, const std::vector<std::string>& params) {
  for (const auto& p : params) {
    if (p == "i") throw CoefficientParseError("parameter name 'i' is reserved for the imaginary unit");
  }
  ParamExpr e = ExprParser(text, params).run();
  e.source_ = std::string(text);
  return e;
}

}  // namespace quatcoh
