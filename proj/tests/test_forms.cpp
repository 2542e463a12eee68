#include "doctest.h"

#include "oracles.hpp"
#include "stabcoh/forms.hpp"

using namespace stabcoh;

namespace {

Monomial e(unsigned i, unsigned p = 1) { return Monomial::generator(i, p); }
const Monomial one{};

FormElement apply(const FormsComplex& fc, const SparseMatrix& m, const FormElement& w, int n, int n_out, int d) {
  return fc.from_vector(m.apply(fc.as_vector(w, n, d)), n_out, d);
}

FormElement ext(const FormsComplex& fc, const FormElement& w, int n, int d) {
  return apply(fc, fc.exterior_derivative(n, d), w, n, n + 1, d);
}

FormElement contract(const FormsComplex& fc, const FormElement& w, int n, int d) {
  return apply(fc, fc.interior_product(n, d), w, n, n - 1, d);
}

}  // namespace

TEST_CASE("make_form sorts with sign") {
  CHECK(make_form(one, {2, 1}) == make_form(one, {1, 2}, -1));
  CHECK(make_form(one, {1, 1}).is_zero());
  CHECK(make_form(one, {3, 1, 2}) == make_form(one, {1, 2, 3}));
}

TEST_CASE("form basis examples") {
  const FormsComplex fc(DegreeBound(12));
  CHECK(fc.form_basis(0, 4).size() == 2);
  const std::vector<FormBasisElement> b16{{e(1, 2), {1}}, {e(2), {1}}, {e(1), {2}}, {one, {3}}};
  CHECK(fc.form_basis(1, 6) == b16);
  const std::vector<FormBasisElement> b26{{one, {1, 2}}};
  CHECK(fc.form_basis(2, 6) == b26);
  CHECK(fc.form_basis(3, 10).empty());
  CHECK(fc.max_form_degree() == 3);
}

TEST_CASE("property: form dimensions match the generating function") {
  const FormsComplex fc(DegreeBound(24));
  for (int n = 0; n <= fc.max_form_degree(); ++n)
    for (int d = 0; d <= 24; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(fc.dim(n, d) == oracle::forms_dim(n, d));
    }
}

TEST_CASE("exterior derivative examples") {
  const FormsComplex fc(DegreeBound(12));
  CHECK(ext(fc, make_form(e(1), {}), 0, 2) == make_form(one, {1}));
  CHECK(ext(fc, make_form(one, {1, 2}), 2, 6).is_zero());
  CHECK(ext(fc, make_form(e(1, 2), {2}), 1, 8) == make_form(e(1), {1, 2}, 2));
  // odd generators anticommute: d(e_2 de_1) = de_2 ∧ de_1 = -de_1 ∧ de_2
  CHECK(ext(fc, make_form(e(2), {1}), 1, 6) == make_form(one, {1, 2}, -1));
}

TEST_CASE("contraction examples") {
  const FormsComplex fc(DegreeBound(12));
  CHECK(contract(fc, make_form(one, {1}), 1, 2) == make_form(e(1), {}));
  CHECK(contract(fc, make_form(e(2), {3}), 1, 10) == make_form(e(2) * e(3), {}));
  CHECK(contract(fc, make_form(one, {1, 2}), 2, 6) == make_form(e(1), {2}) - make_form(e(2), {1}));
  CHECK_THROWS_AS(fc.interior_product(0, 4), std::invalid_argument);
}

TEST_CASE("Lie derivative examples") {
  const FormsComplex fc(DegreeBound(12));
  const auto lie = [&](const FormElement& w, int n, int d) { return apply(fc, fc.lie_derivative(n, d), w, n, n, d); };
  CHECK(lie(make_form(one, {1}), 1, 2) == make_form(one, {1}));
  CHECK(lie(make_form(e(1, 2), {2}), 1, 8) == make_form(e(1, 2), {2}, 3));
  CHECK(fc.lie_derivative(0, 0).is_zero());
  CHECK(fc.lie_derivative(0, 0).rows() == 1);
}

TEST_CASE("Cartan examples") {
  const FormsComplex fc(DegreeBound(12));
  CHECK(fc.verify_cartan(1, 2));
  CHECK(fc.verify_cartan(0, 0));
  CHECK(fc.verify_cartan(2, 10));
}

TEST_CASE("exactness examples") {
  const FormsComplex fc(DegreeBound(12));
  const auto r2 = fc.verify_exactness(2);
  CHECK(r2.exact());
  CHECK(r2.spots.at(1).dim == 1);
  CHECK(r2.spots.at(0).rank_in == 1);

  const auto r6 = fc.verify_exactness(6);
  CHECK(r6.exact());
  CHECK(r6.spots.at(1).dim - r6.spots.at(1).rank_out == 1);
  CHECK(r6.spots.at(1).dim == 4);

  const auto r8 = fc.verify_exactness(8);
  CHECK(r8.exact());
  CHECK(r8.spots.at(1).dim - r8.spots.at(1).rank_out == 2);
  CHECK(r8.spots.at(1).dim == 7);

  CHECK_THROWS_AS(fc.verify_exactness(0), std::invalid_argument);
  CHECK_THROWS_AS(fc.verify_exactness(14), std::out_of_range);
}

TEST_CASE("property: d∘d = 0, p∘p = 0, Cartan and L_D diagonal at every bidegree") {
  const FormsComplex fc(DegreeBound(24));
  for (int d = 0; d <= 24; d += 2) {
    for (int n = 0; n <= fc.max_form_degree(); ++n) {
      CAPTURE(d);
      CAPTURE(n);
      if (n + 1 <= fc.max_form_degree())
        CHECK((fc.exterior_derivative(n + 1, d) * fc.exterior_derivative(n, d)).is_zero());
      if (n >= 2) CHECK((fc.interior_product(n - 1, d) * fc.interior_product(n, d)).is_zero());
      CHECK(fc.verify_cartan(n, d));
      const auto lie = fc.lie_derivative(n, d);
      const auto basis = fc.form_basis(n, d);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const long eigenvalue = static_cast<long>(basis[i].coefficient.factor_count()) + n;
        CHECK(lie.row(i).size() == (eigenvalue == 0 ? 0u : 1u));
        CHECK(lie.at(i, i) == eigenvalue);
      }
    }
  }
}

TEST_CASE("property: resolution is exact in positive degree") {
  const FormsComplex fc(DegreeBound(24));
  for (int d = 1; d <= 24; ++d) {
    CAPTURE(d);
    CHECK(fc.verify_exactness(d).exact());
  }
}
