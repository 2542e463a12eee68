#include "stabcoh/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabcoh {

int FormBasisElement::internal_degree() const {
  int d = coefficient.degree();
  for (unsigned j : wedge) d += 2 * static_cast<int>(j);
  return d;
}

std::string FormBasisElement::to_string() const {
  std::string s = coefficient.is_one() && !wedge.empty() ? "" : coefficient.to_string();
  for (std::size_t k = 0; k < wedge.size(); ++k) {
    if (!s.empty()) s += k == 0 ? "*" : "^";
    s += "de" + std::to_string(wedge[k]);
  }
  return s;
}

bool FormBasisElement::operator<(const FormBasisElement& other) const {
  if (wedge.size() != other.wedge.size()) return wedge.size() < other.wedge.size();
  const int da = internal_degree();
  const int db = other.internal_degree();
  if (da != db) return da < db;
  if (wedge != other.wedge) return wedge < other.wedge;
  return coefficient < other.coefficient;
}

FormElement::FormElement(FormBasisElement b, const Rational& c) { add(b, c); }

void FormElement::add(const FormBasisElement& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormElement FormElement::operator+(const FormElement& other) const {
  FormElement out = *this;
  for (const auto& [b, c] : other.terms_) out.add(b, c);
  return out;
}

FormElement FormElement::operator-(const FormElement& other) const {
  return *this + other * Rational(-1);
}

FormElement FormElement::operator*(const Rational& c) const {
  FormElement out;
  for (const auto& [b, v] : terms_) out.add(b, v * c);
  return out;
}

std::string FormElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += "(" + c.get_str() + ")*";
    s += b.to_string();
  }
  return s;
}

FormElement make_form(const Monomial& f, std::vector<unsigned> indices, const Rational& c) {
  int sign = 1;
  // bubble sort keeps the permutation parity explicit
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b + 1 < indices.size() - a; ++b) {
      if (indices[b] == indices[b + 1]) return {};
      if (indices[b] > indices[b + 1]) {
        std::swap(indices[b], indices[b + 1]);
        sign = -sign;
      }
    }
  for (std::size_t k = 0; k + 1 < indices.size(); ++k)
    if (indices[k] == indices[k + 1]) return {};
  return FormElement(FormBasisElement{f, std::move(indices)}, c * sign);
}

bool ExactnessReport::exact() const {
  return std::all_of(spots.begin(), spots.end(), [](const ExactnessSpot& s) { return s.exact; });
}

// ------------------------------------------------------------ FormsComplex

namespace {

int largest_form_degree(int bound) {
  int n = 0;
  while ((n + 1) * (n + 2) <= bound) ++n;
  return n;
}

std::vector<std::vector<unsigned>> wedges_up_to(int n, int d) {
  std::vector<std::vector<unsigned>> all;
  for (int w = n * (n + 1); w <= d; w += 2) {
    auto sets = wedge_index_sets(n, w);
    all.insert(all.end(), sets.begin(), sets.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

FormsComplex::FormsComplex(DegreeBound bound)
    : algebra_(bound), max_form_degree_(largest_form_degree(bound.value())) {}

void FormsComplex::require(int n, int d, const char* what) const {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative form degree");
  bound().require(d, what);
}

std::vector<FormBasisElement> FormsComplex::form_basis(int n, int d) const {
  require(n, d, "form_basis");
  std::vector<FormBasisElement> out;
  for (const auto& wedge : wedges_up_to(n, d)) {
    int w = 0;
    for (unsigned j : wedge) w += 2 * static_cast<int>(j);
    for (const Monomial& m : algebra_.monomial_basis(d - w)) out.push_back({m, wedge});
  }
  return out;
}

std::size_t FormsComplex::dim(int n, int d) const {
  require(n, d, "dim");
  std::size_t total = 0;
  for (const auto& wedge : wedges_up_to(n, d)) {
    int w = 0;
    for (unsigned j : wedge) w += 2 * static_cast<int>(j);
    total += algebra_.hilbert_function(d - w);
  }
  return total;
}

std::size_t FormsComplex::wedge_offset(const std::vector<unsigned>& wedge, int d) const {
  std::size_t offset = 0;
  for (const auto& other : wedges_up_to(static_cast<int>(wedge.size()), d)) {
    if (other == wedge) return offset;
    int w = 0;
    for (unsigned j : other) w += 2 * static_cast<int>(j);
    offset += algebra_.hilbert_function(d - w);
  }
  throw std::out_of_range("wedge index list not in range");
}

std::size_t FormsComplex::index_of(const FormBasisElement& b) const {
  const int d = b.internal_degree();
  require(b.form_degree(), d, "index_of");
  return wedge_offset(b.wedge, d) + algebra_.index_of(b.coefficient);
}

VectorQ FormsComplex::as_vector(const FormElement& w, int n, int d) const {
  VectorQ v(dim(n, d));
  for (const auto& [b, c] : w.terms()) {
    if (b.form_degree() != n || b.internal_degree() != d)
      throw std::invalid_argument("as_vector: form " + b.to_string() + " not of the requested bidegree");
    v.add(index_of(b), c);
  }
  return v;
}

FormElement FormsComplex::from_vector(const VectorQ& v, int n, int d) const {
  const auto basis = form_basis(n, d);
  if (v.dim() != basis.size()) throw std::invalid_argument("from_vector: dimension mismatch");
  FormElement w;
  for (const auto& [k, c] : v.entries()) w.add(basis[k], c);
  return w;
}

namespace {

// Builds the matrix of a linear operator given by its action on basis forms.
template <typename Fn>
SparseMatrix operator_matrix(const FormsComplex& cx, int n_src, int n_dst, int d, Fn&& image) {
  const auto src = cx.form_basis(n_src, d);
  const std::size_t rows = n_dst < 0 ? 0 : cx.dim(n_dst, d);
  std::vector<Triplet> triplets;
  for (std::size_t c = 0; c < src.size(); ++c) {
    const FormElement out = image(src[c]);
    for (const auto& [b, v] : out.terms()) triplets.push_back({cx.index_of(b), c, v});
  }
  return SparseMatrix(rows, src.size(), std::move(triplets));
}

}  // namespace

SparseMatrix FormsComplex::exterior_derivative(int n, int d) const {
  require(n, d, "exterior_derivative");
  return operator_matrix(*this, n, n + 1, d, [](const FormBasisElement& b) {
    FormElement out;
    const auto& exps = b.coefficient.exponents();
    for (unsigned i = 1; i <= exps.size(); ++i) {
      const unsigned a = exps[i - 1];
      if (a == 0) continue;
      std::vector<unsigned> indices{i};
      indices.insert(indices.end(), b.wedge.begin(), b.wedge.end());
      out = out + make_form(b.coefficient.divided_by_generator(i), std::move(indices), Rational(a));
    }
    return out;
  });
}

SparseMatrix FormsComplex::interior_product(int n, int d) const {
  require(n, d, "interior_product");
  if (n == 0) throw std::invalid_argument("interior_product: form degree must be >= 1");
  return operator_matrix(*this, n, n - 1, d, [](const FormBasisElement& b) {
    FormElement out;
    for (std::size_t k = 0; k < b.wedge.size(); ++k) {
      std::vector<unsigned> rest = b.wedge;
      rest.erase(rest.begin() + static_cast<long>(k));
      const Rational sign = (k % 2 == 0) ? 1 : -1;
      out.add(FormBasisElement{b.coefficient * Monomial::generator(b.wedge[k]), std::move(rest)}, sign);
    }
    return out;
  });
}

SparseMatrix FormsComplex::lie_derivative(int n, int d) const {
  require(n, d, "lie_derivative");
  return operator_matrix(*this, n, n, d, [](const FormBasisElement& b) {
    // Leibniz over the factors: each e_i contributes e_i * d/de_i (= exponent),
    // each de_j contributes d(D e_j) = de_j.
    FormElement out;
    const auto& exps = b.coefficient.exponents();
    for (unsigned a : exps)
      if (a > 0) out.add(b, Rational(a));
    for (std::size_t k = 0; k < b.wedge.size(); ++k) out.add(b, 1);
    return out;
  });
}

SparseMatrix FormsComplex::cartan_homotopy(int n, int d) const {
  require(n, d, "cartan_homotopy");
  SparseMatrix up_then_down = interior_product(n + 1, d) * exterior_derivative(n, d);
  if (n == 0) return up_then_down;
  return up_then_down + exterior_derivative(n - 1, d) * interior_product(n, d);
}

SparseMatrix FormsComplex::euler_eigenvalues(int n, int d) const {
  const auto basis = form_basis(n, d);
  std::vector<Triplet> triplets;
  for (std::size_t k = 0; k < basis.size(); ++k)
    triplets.push_back({k, k, Rational(basis[k].coefficient.factor_count() + static_cast<unsigned>(n))});
  return SparseMatrix(basis.size(), basis.size(), std::move(triplets));
}

bool FormsComplex::verify_cartan(int n, int d) const {
  const SparseMatrix predicted = euler_eigenvalues(n, d);
  return cartan_homotopy(n, d) == predicted && lie_derivative(n, d) == predicted;
}

ExactnessReport FormsComplex::verify_exactness(int d) const {
  if (d == 0)
    throw std::invalid_argument("verify_exactness: the resolution is exact only in positive degrees");
  bound().require(d, "verify_exactness");

  const int top = max_form_degree_ + 1;
  // out_rank[n] = rank of p_D : Omega^n -> Omega^{n-1}
  std::vector<std::size_t> out_rank(static_cast<std::size_t>(top) + 2, 0);
  for (int n = 1; n <= top; ++n) out_rank[static_cast<std::size_t>(n)] = rank(interior_product(n, d));

  ExactnessReport report;
  report.internal_degree = d;
  for (int n = 0; n <= max_form_degree_; ++n) {
    ExactnessSpot s;
    s.form_degree = n;
    s.dim = dim(n, d);
    s.rank_in = out_rank[static_cast<std::size_t>(n) + 1];
    // at n = 0 the outgoing map is the augmentation, zero in positive degree
    s.rank_out = n == 0 ? 0 : out_rank[static_cast<std::size_t>(n)];
    s.exact = s.rank_in + s.rank_out == s.dim;
    report.spots.push_back(s);
  }
  return report;
}

}  // namespace stabcoh
