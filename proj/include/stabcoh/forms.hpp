#pragma once

// Kähler differential forms Omega^n = A ⊗ Lambda^n E over A = Q[e_i], with the
// exterior derivative d, the contraction p_D with the Euler vector field
// D = sum e_i d/de_i, and the Lie derivative L_D.
//
// Every operator is materialized per bidegree (form degree n, internal
// degree d) as a SparseMatrix in the canonical bases below, so all identities
// reduce to exact matrix equalities.
//
// Signs: the de_i are odd. d(f de_S) = sum_i (df/de_i) de_i ∧ de_S and
// p_D(de_{s_1} ∧ ... ∧ de_{s_n}) = sum_k (-1)^{k+1} e_{s_k} de_{S minus s_k}.

#include <map>
#include <string>
#include <vector>

#include "stabcoh/algebra.hpp"

namespace stabcoh {

/// coefficient * de_{wedge[0]} ∧ ... ∧ de_{wedge[n-1]}, wedge strictly increasing.
struct FormBasisElement {
  Monomial coefficient;
  std::vector<unsigned> wedge;

  int form_degree() const { return static_cast<int>(wedge.size()); }
  int internal_degree() const;
  /// internal - form degree; de_i sits in cohomological degree 2i - 1.
  int cohomological_degree() const { return internal_degree() - form_degree(); }
  std::string to_string() const;

  bool operator==(const FormBasisElement&) const = default;
  bool operator<(const FormBasisElement& other) const;
};

class FormElement {
 public:
  FormElement() = default;
  FormElement(FormBasisElement b, const Rational& c = 1);

  const std::map<FormBasisElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const FormBasisElement& b, const Rational& c);
  FormElement operator+(const FormElement& other) const;
  FormElement operator-(const FormElement& other) const;
  FormElement operator*(const Rational& c) const;
  bool operator==(const FormElement&) const = default;
  std::string to_string() const;

 private:
  std::map<FormBasisElement, Rational> terms_;
};

/// f de_{i_1} ∧ ... ∧ de_{i_n} with the indices sorted and the sign of the
/// sorting permutation applied; zero if an index repeats.
FormElement make_form(const Monomial& f, std::vector<unsigned> indices, const Rational& c = 1);

struct ExactnessSpot {
  int form_degree = 0;
  std::size_t dim = 0;
  /// rank of p_D arriving from Omega^{n+1}
  std::size_t rank_in = 0;
  /// rank of the outgoing map (p_D to Omega^{n-1}, or the augmentation at n = 0)
  std::size_t rank_out = 0;
  bool exact = false;
};

struct ExactnessReport {
  int internal_degree = 0;
  std::vector<ExactnessSpot> spots;
  bool exact() const;
};

class FormsComplex {
 public:
  explicit FormsComplex(DegreeBound bound = DegreeBound{});

  const SymAlgebra& algebra() const { return algebra_; }
  const DegreeBound& bound() const { return algebra_.bound(); }
  /// Largest n with n(n+1) <= bound; Omega^n vanishes in range above it.
  int max_form_degree() const { return max_form_degree_; }

  /// Wedge-index-major, then canonical monomial order. Empty when n(n+1) > d.
  std::vector<FormBasisElement> form_basis(int n, int d) const;
  std::size_t dim(int n, int d) const;
  std::size_t index_of(const FormBasisElement& b) const;

  VectorQ as_vector(const FormElement& w, int n, int d) const;
  FormElement from_vector(const VectorQ& v, int n, int d) const;

  /// d : Omega^n_d -> Omega^{n+1}_d
  SparseMatrix exterior_derivative(int n, int d) const;
  /// p_D : Omega^n_d -> Omega^{n-1}_d, n >= 1
  SparseMatrix interior_product(int n, int d) const;
  /// L_D as the derivation with L_D(e_i) = e_i and L_D(de_i) = de_i, applied
  /// factor by factor.
  SparseMatrix lie_derivative(int n, int d) const;
  /// d p_D + p_D d on Omega^n_d.
  SparseMatrix cartan_homotopy(int n, int d) const;
  /// diag(m + n), m the number of generator factors of the coefficient.
  SparseMatrix euler_eigenvalues(int n, int d) const;

  bool verify_cartan(int n, int d) const;
  /// Throws std::invalid_argument for d == 0 (the resolution is only exact in
  /// positive degrees) and std::out_of_range above the bound.
  ExactnessReport verify_exactness(int d) const;

 private:
  void require(int n, int d, const char* what) const;
  std::size_t wedge_offset(const std::vector<unsigned>& wedge, int d) const;

  SymAlgebra algebra_;
  int max_form_degree_;
};

}  // namespace stabcoh
