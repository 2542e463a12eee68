#pragma once

// The polynomial algebra A = Q[e_1, e_2, ...] with e_i in internal degree 2i,
// truncated at a fixed even degree bound.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "stabcoh/linalg.hpp"

namespace stabcoh {

/// Largest internal degree any computation may touch. Must be even and >= 0.
class DegreeBound {
 public:
  static constexpr int kDefault = 24;

  explicit DegreeBound(int max_internal_degree = kDefault);
  int value() const { return max_; }
  bool contains(int d) const { return d >= 0 && d <= max_; }
  /// Throws std::out_of_range when d is negative or above the bound.
  void require(int d, const char* what) const;

 private:
  int max_;
};

/// e_1^{a_1} e_2^{a_2} ...; exponents_[i-1] is the power of e_i, trailing
/// zeros trimmed so that equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);
  static Monomial generator(unsigned i, unsigned power = 1);

  const std::vector<unsigned>& exponents() const { return exponents_; }
  unsigned exponent(unsigned i) const;
  int degree() const;
  /// Number of generator factors counted with multiplicity.
  unsigned factor_count() const;
  bool is_one() const { return exponents_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// this / e_i; requires exponent(i) > 0.
  Monomial divided_by_generator(unsigned i) const;

  std::string to_string() const;

  bool operator==(const Monomial& other) const = default;
  /// Degree first, then the canonical in-degree order: exponent vectors in
  /// descending lexicographic order read from e_1 upward (e_1^2 before e_2).
  bool operator<(const Monomial& other) const;

 private:
  std::vector<unsigned> exponents_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const Monomial& m, const Rational& c = 1);
  static AlgebraElement generator(unsigned i) { return AlgebraElement(Monomial::generator(i)); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of every term, or -1 for zero; throws std::invalid_argument when
  /// the element mixes degrees.
  int homogeneous_degree() const;

  void add(const Monomial& m, const Rational& c);
  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator*(const Rational& c) const;
  bool operator==(const AlgebraElement& other) const = default;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// All strictly increasing index lists (i_1 < ... < i_n) with 2(i_1+...+i_n) = d,
/// in lexicographic order. These index the basis of the exterior power
/// (Lambda^n E)_d.
std::vector<std::vector<unsigned>> wedge_index_sets(int n, int d);

/// Per-degree monomial bases of A below a bound. Bases are built once at
/// construction; the object is immutable afterwards.
class SymAlgebra {
 public:
  explicit SymAlgebra(DegreeBound bound = DegreeBound{});

  const DegreeBound& bound() const { return bound_; }

  /// Canonical basis of A_d. Odd d gives an empty list; d outside the bound throws.
  const std::vector<Monomial>& monomial_basis(int d) const;
  std::size_t hilbert_function(int d) const { return monomial_basis(d).size(); }
  std::size_t index_of(const Monomial& m) const;

  /// Throws std::out_of_range when a product term would exceed the bound.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  VectorQ as_vector(const AlgebraElement& a, int d) const;
  AlgebraElement from_vector(const VectorQ& v, int d) const;

 private:
  DegreeBound bound_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::map<Monomial, std::size_t>> index_;
};

}  // namespace stabcoh
