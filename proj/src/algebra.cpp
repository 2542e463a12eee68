#include "stabcoh/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stabcoh {

DegreeBound::DegreeBound(int max_internal_degree) : max_(max_internal_degree) {
  if (max_ < 0 || max_ % 2 != 0)
    throw std::invalid_argument("degree bound must be a nonnegative even integer, got " +
                                std::to_string(max_));
}

void DegreeBound::require(int d, const char* what) const {
  if (!contains(d))
    throw std::out_of_range(std::string(what) + ": internal degree " + std::to_string(d) +
                            " outside [0, " + std::to_string(max_) + "]");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
  while (!exponents_.empty() && exponents_.back() == 0) exponents_.pop_back();
}

Monomial Monomial::generator(unsigned i, unsigned power) {
  if (i == 0) throw std::invalid_argument("generator index must be >= 1");
  std::vector<unsigned> e(i, 0);
  e[i - 1] = power;
  return Monomial(std::move(e));
}

unsigned Monomial::exponent(unsigned i) const {
  return (i >= 1 && i <= exponents_.size()) ? exponents_[i - 1] : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (std::size_t k = 0; k < exponents_.size(); ++k) d += 2 * static_cast<int>(k + 1) * static_cast<int>(exponents_[k]);
  return d;
}

unsigned Monomial::factor_count() const {
  unsigned n = 0;
  for (unsigned a : exponents_) n += a;
  return n;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(std::max(exponents_.size(), other.exponents_.size()), 0);
  for (std::size_t k = 0; k < exponents_.size(); ++k) e[k] += exponents_[k];
  for (std::size_t k = 0; k < other.exponents_.size(); ++k) e[k] += other.exponents_[k];
  return Monomial(std::move(e));
}

Monomial Monomial::divided_by_generator(unsigned i) const {
  if (exponent(i) == 0) throw std::invalid_argument("monomial not divisible by generator");
  std::vector<unsigned> e = exponents_;
  --e[i - 1];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  if (exponents_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(k + 1);
    if (exponents_[k] > 1) s += "^" + std::to_string(exponents_[k]);
  }
  return s;
}

bool Monomial::operator<(const Monomial& other) const {
  const int da = degree();
  const int db = other.degree();
  if (da != db) return da < db;
  const std::size_t n = std::max(exponents_.size(), other.exponents_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned a = k < exponents_.size() ? exponents_[k] : 0;
    const unsigned b = k < other.exponents_.size() ? other.exponents_[k] : 0;
    if (a != b) return a > b;
  }
  return false;
}

// ---------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(const Monomial& m, const Rational& c) { add(m, c); }

int AlgebraElement::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) throw std::invalid_argument("element is not homogeneous");
  return d;
}

void AlgebraElement::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  AlgebraElement out = *this;
  for (const auto& [m, c] : other.terms_) out.add(m, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  return *this + other * Rational(-1);
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
  AlgebraElement out;
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += "(" + c.get_str() + ")*";
    s += m.to_string();
  }
  return s;
}

// ------------------------------------------------------------- exterior sets

std::vector<std::vector<unsigned>> wedge_index_sets(int n, int d) {
  std::vector<std::vector<unsigned>> out;
  if (n < 0 || d < 0 || d % 2 != 0) return out;
  std::vector<unsigned> current;
  std::function<void(unsigned, int)> rec = [&](unsigned next, int remaining) {
    const int slots = n - static_cast<int>(current.size());
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    // smallest possible weight of the remaining slots starting at `next`
    for (unsigned i = next;; ++i) {
      const int min_rest = slots * static_cast<int>(i) + slots * (slots - 1) / 2;
      if (min_rest > remaining) break;
      current.push_back(i);
      rec(i + 1, remaining - static_cast<int>(i));
      current.pop_back();
    }
  };
  rec(1, d / 2);
  return out;
}

// --------------------------------------------------------------- SymAlgebra

namespace {

// Exponent vectors of weight w (sum of i * a_i), emitted in descending
// lexicographic order starting from e_1.
void enumerate(unsigned i, int remaining, std::vector<unsigned>& exps, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(exps);
    return;
  }
  if (static_cast<int>(i) > remaining) return;
  if (exps.size() < i) exps.resize(i, 0);
  for (int a = remaining / static_cast<int>(i); a >= 0; --a) {
    exps[i - 1] = static_cast<unsigned>(a);
    enumerate(i + 1, remaining - a * static_cast<int>(i), exps, out);
  }
  exps[i - 1] = 0;
}

}  // namespace

SymAlgebra::SymAlgebra(DegreeBound bound) : bound_(bound) {
  bases_.resize(static_cast<std::size_t>(bound_.value()) + 1);
  index_.resize(bases_.size());
  for (int d = 0; d <= bound_.value(); d += 2) {
    std::vector<unsigned> exps;
    enumerate(1, d / 2, exps, bases_[d]);
    for (std::size_t k = 0; k < bases_[d].size(); ++k) index_[d].emplace(bases_[d][k], k);
  }
}

const std::vector<Monomial>& SymAlgebra::monomial_basis(int d) const {
  bound_.require(d, "monomial_basis");
  return bases_[static_cast<std::size_t>(d)];
}

std::size_t SymAlgebra::index_of(const Monomial& m) const {
  const int d = m.degree();
  bound_.require(d, "index_of");
  return index_[static_cast<std::size_t>(d)].at(m);
}

AlgebraElement SymAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      bound_.require(m.degree(), "multiply");
      out.add(m, ca * cb);
    }
  return out;
}

VectorQ SymAlgebra::as_vector(const AlgebraElement& a, int d) const {
  const auto& basis = monomial_basis(d);
  const int deg = a.homogeneous_degree();
  if (deg != -1 && deg != d)
    throw std::invalid_argument("as_vector: element has degree " + std::to_string(deg) +
                                ", expected " + std::to_string(d));
  VectorQ v(basis.size());
  for (const auto& [m, c] : a.terms()) v.add(index_of(m), c);
  return v;
}

AlgebraElement SymAlgebra::from_vector(const VectorQ& v, int d) const {
  const auto& basis = monomial_basis(d);
  if (v.dim() != basis.size()) throw std::invalid_argument("from_vector: dimension mismatch");
  AlgebraElement a;
  for (const auto& [k, c] : v.entries()) a.add(basis[k], c);
  return a;
}

}  // namespace stabcoh
