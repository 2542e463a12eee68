#include "stabcoh/stable.hpp"

#include <algorithm>

#include "stabcoh/parallel.hpp"

namespace stabcoh {

// ----------------------------------------------------------- F elements

bool TwistedTerm::operator<(const TwistedTerm& other) const {
  const int da = internal_degree();
  const int db = other.internal_degree();
  if (da != db) return da < db;
  if (generator != other.generator) return generator < other.generator;
  return coefficient < other.coefficient;
}

TwistedElement::TwistedElement(TwistedTerm t, const Rational& c) { add(t, c); }

int TwistedElement::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.internal_degree();
  for (const auto& [t, c] : terms_)
    if (t.internal_degree() != d) throw std::invalid_argument("twisted element is not homogeneous");
  return d;
}

void TwistedElement::add(const TwistedTerm& t, const Rational& c) {
  if (t.generator == 0) throw std::invalid_argument("m_{l,1} needs l >= 1");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwistedElement TwistedElement::operator+(const TwistedElement& other) const {
  TwistedElement out = *this;
  for (const auto& [t, c] : other.terms_) out.add(t, c);
  return out;
}

TwistedElement TwistedElement::operator-(const TwistedElement& other) const {
  return *this + other * Rational(-1);
}

TwistedElement TwistedElement::operator*(const Rational& c) const {
  TwistedElement out;
  for (const auto& [t, v] : terms_) out.add(t, v * c);
  return out;
}

TwistedElement TwistedElement::times(const Monomial& f) const {
  TwistedElement out;
  for (const auto& [t, v] : terms_) out.add(TwistedTerm{t.generator, t.coefficient * f}, v);
  return out;
}

std::string TwistedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += "(" + c.get_str() + ")*";
    if (!t.coefficient.is_one()) s += t.coefficient.to_string() + "*";
    s += "m" + std::to_string(t.generator);
  }
  return s;
}

TwistedElement twisted_class(unsigned l) { return TwistedElement(TwistedTerm{l, Monomial{}}); }

TwistedElement antisymmetric_class(unsigned i, unsigned j) {
  return twisted_class(j).times(Monomial::generator(i)) - twisted_class(i).times(Monomial::generator(j));
}

int TwistedClassSymbol::cohomological_degree() const {
  switch (kind) {
    case Kind::e: return 2 * static_cast<int>(first);
    case Kind::m: return 2 * static_cast<int>(first) - 1;
    case Kind::M: return 2 * static_cast<int>(first + second) - 1;
    case Kind::theta: return 0;
  }
  return 0;
}

std::string TwistedClassSymbol::to_string() const {
  switch (kind) {
    case Kind::e: return "e_" + std::to_string(first);
    case Kind::m: return "m_{" + std::to_string(first) + ",1}";
    case Kind::M: return "M_{" + std::to_string(first) + "," + std::to_string(second) + "}";
    case Kind::theta: return "theta";
  }
  return {};
}

std::string to_string(Coefficients c) {
  switch (c) {
    case Coefficients::Q: return "Q";
    case Coefficients::H: return "H";
    case Coefficients::Htilde: return "Htilde";
    case Coefficients::HtildeDual: return "HtildeDual";
  }
  return {};
}

Coefficients parse_coefficients(const std::string& label) {
  if (label == "Q") return Coefficients::Q;
  if (label == "H") return Coefficients::H;
  if (label == "Htilde") return Coefficients::Htilde;
  if (label == "HtildeDual") return Coefficients::HtildeDual;
  throw std::invalid_argument("unknown coefficient label '" + label + "' (expected Q, H, Htilde or HtildeDual)");
}

std::size_t exterior_power_dim(int n, int d) { return wedge_index_sets(n, d).size(); }

// -------------------------------------------------------- StableCohomology

namespace {

std::vector<int> twisted_generator_degrees(int bound) {
  std::vector<int> degrees;
  for (int l = 1; 2 * l <= bound; ++l) degrees.push_back(2 * l);
  return degrees;
}

}  // namespace

StableCohomology::StableCohomology(DegreeBound bound, unsigned jobs) : forms_(bound), jobs_(jobs) {
  const SymAlgebra& a = algebra();
  const int top = bound.value();
  base_ = std::make_shared<const GradedModule>(free_module(a, {0}, 0, Parity::even));
  twisted_ = std::make_shared<const GradedModule>(
      free_module(a, twisted_generator_degrees(top), -1, Parity::odd));

  std::map<int, SparseMatrix> contra;
  for (int d = 0; d + 2 <= top; d += 2) {
    std::vector<VectorQ> columns;
    for (const Monomial& f : a.monomial_basis(d)) columns.push_back(as_vector(twisted_class(1).times(f), d + 2));
    contra.emplace(d, SparseMatrix::from_columns(twisted_->dim(d + 2), columns));
  }
  contra_.emplace(base_, twisted_, 2, std::move(contra));

  std::map<int, SparseMatrix> cov;
  const TwistedElement m11 = twisted_class(1);
  for (int d = 0; d <= top; d += 2) {
    std::vector<VectorQ> columns;
    for (std::size_t k = 0; k < twisted_->dim(d); ++k) {
      const TwistedElement x = from_vector(VectorQ::unit(twisted_->dim(d), k), d);
      columns.push_back(a.as_vector(contraction_pairing(m11, x), d));
    }
    cov.emplace(d, SparseMatrix::from_columns(a.hilbert_function(d), columns));
  }
  cov_.emplace(twisted_, base_, 0, std::move(cov));

  kernel_.emplace(kernel_module(*cov_, jobs_));
  tilde_.emplace(direct_sum(trivial_module(kernel_->module->bound(), 0, 0), *kernel_->module));
}

const KernelModule& StableCohomology::covariant_kernel() const { return *kernel_; }
const GradedModule& StableCohomology::tilde_module() const { return *tilde_; }

VectorQ StableCohomology::as_vector(const TwistedElement& x, int d) const {
  bound().require(d, "as_vector");
  const int deg = x.homogeneous_degree();
  if (deg != -1 && deg != d) throw std::invalid_argument("as_vector: twisted element not of degree " + std::to_string(d));
  VectorQ v(twisted_->dim(d));
  for (const auto& [t, c] : x.terms()) {
    std::size_t offset = 0;
    for (unsigned l = 1; l < t.generator; ++l)
      if (d >= 2 * static_cast<int>(l)) offset += algebra().hilbert_function(d - 2 * static_cast<int>(l));
    v.add(offset + algebra().index_of(t.coefficient), c);
  }
  return v;
}

TwistedElement StableCohomology::from_vector(const VectorQ& v, int d) const {
  bound().require(d, "from_vector");
  if (v.dim() != twisted_->dim(d)) throw std::invalid_argument("from_vector: dimension mismatch");
  std::vector<TwistedTerm> basis;
  for (unsigned l = 1; 2 * static_cast<int>(l) <= d; ++l)
    for (const Monomial& f : algebra().monomial_basis(d - 2 * static_cast<int>(l))) basis.push_back({l, f});
  TwistedElement x;
  for (const auto& [k, c] : v.entries()) x.add(basis[k], c);
  return x;
}

AlgebraElement StableCohomology::contraction_pairing(const TwistedElement& x, const TwistedElement& y) const {
  AlgebraElement out;
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) {
      const AlgebraElement term = algebra().multiply(
          AlgebraElement(tx.coefficient * ty.coefficient, cx * cy),
          AlgebraElement::generator(tx.generator + ty.generator - 1));
      out = out - term;
    }
  return out;
}

StableCohomologyTable StableCohomology::tilde_dual_table(int up_to) const {
  if (up_to < 0 || up_to >= bound().value())
    throw std::out_of_range("tilde_dual_table: cohomological degree must lie in [0, bound)");
  StableCohomologyTable table{Coefficients::HtildeDual, {}, {}};
  const GradedModule& F = *twisted_;
  for (int c = 0; c <= up_to; ++c) {
    if (c % 2 == 0) {
      const std::size_t r = rank(contra_->matrix(c));
      if (r != algebra().hilbert_function(c))
        throw Falsified("m_{1,1} cup - is not injective in cohomological degree " + std::to_string(c), c);
      table.dims[c] = 0;
      continue;
    }
    const int t = c + 1;
    const std::size_t coker = F.dim(t) - rank(contra_->matrix(t - 2));
    std::size_t expected = 0;
    for (int a = 2; 2 * a <= t; ++a) expected += algebra().hilbert_function(t - 2 * a);
    if (coker != expected)
      throw Falsified("cokernel of m_{1,1} cup - has dimension " + std::to_string(coker) + ", expected " +
                          std::to_string(expected) + " in cohomological degree " + std::to_string(c),
                      c);
    table.dims[c] = coker;

    // minimal generators of the cokernel: F_t modulo image + decomposables
    std::vector<SparseMatrix> blocks{contra_->matrix(t - 2).transpose()};
    for (unsigned i = 1; t - 2 * static_cast<int>(i) >= 0; ++i)
      blocks.push_back(F.action(i, t - 2 * static_cast<int>(i)).transpose());
    const std::size_t gens = F.dim(t) - rank(SparseMatrix::vstack(blocks, F.dim(t)));
    if (gens > 0) table.generators[t] = gens;
  }
  return table;
}

StableCohomologyTable StableCohomology::tilde_table(int up_to) const {
  if (up_to < 0 || up_to >= bound().value())
    throw std::out_of_range("tilde_table: cohomological degree must lie in [0, bound)");
  StableCohomologyTable table{Coefficients::Htilde, {}, {}};
  for (int c = 0; c <= up_to; ++c) {
    if (c % 2 == 0) {
      const std::size_t dim_a = algebra().hilbert_function(c);
      const std::size_t r = rank(cov_->matrix(c));
      if (c > 0 && r != dim_a)
        throw Falsified("mu(m_{1,1}, -) is not onto A in cohomological degree " + std::to_string(c), c);
      table.dims[c] = dim_a - r;
      continue;
    }
    const int t = c + 1;
    const std::size_t k = kernel_->module->dim(t);
    const std::size_t via_forms = forms_.dim(1, t) - rank(forms_.interior_product(1, t));
    if (k != via_forms)
      throw Falsified("kernel of mu(m_{1,1}, -) has dimension " + std::to_string(k) +
                          " but ker(p_D) has dimension " + std::to_string(via_forms),
                      c);
    table.dims[c] = k;
  }
  for (const auto& [d, n] : minimal_generators(*tilde_, std::min(up_to + 1, tilde_->bound().value()), jobs_).counts)
    table.generators[d] = n;
  return table;
}

StableCohomologyTable StableCohomology::table(Coefficients c, int up_to) const {
  switch (c) {
    case Coefficients::Htilde: return tilde_table(up_to);
    case Coefficients::HtildeDual: return tilde_dual_table(up_to);
    case Coefficients::Q: {
      bound().require(up_to, "table");
      StableCohomologyTable t{c, {}, {}};
      for (int k = 0; k <= up_to; ++k) t.dims[k] = algebra().hilbert_function(k);
      return t;
    }
    case Coefficients::H: {
      if (up_to < 0 || up_to >= bound().value())
        throw std::out_of_range("table: cohomological degree must lie in [0, bound)");
      StableCohomologyTable t{c, {}, {}};
      for (int k = 0; k <= up_to; ++k) t.dims[k] = k % 2 == 0 ? 0 : twisted_->dim(k + 1);
      return t;
    }
  }
  throw std::invalid_argument("unknown coefficients");
}

GeneratorReport StableCohomology::verify_generators(int up_to) const {
  bound().require(up_to, "verify_generators");
  GeneratorReport report;
  const GradedModule& K = *kernel_->module;
  const MinimalGenerators mingens = minimal_generators(K, up_to, jobs_);

  std::vector<int> degrees;
  for (int d = 2; d <= up_to; d += 2) degrees.push_back(d);
  report.degrees.resize(degrees.size());

  parallel_for(degrees.size(), jobs_, [&](std::size_t slot) {
    const int d = degrees[slot];
    GeneratorDegreeData row;
    row.internal_degree = d;
    row.kernel_dim = K.dim(d);
    std::vector<VectorQ> span;
    for (unsigned i = 1; 2 * static_cast<int>(i) < d; ++i)
      for (unsigned j = i + 1; 2 * static_cast<int>(i + j) <= d; ++j)
        for (const Monomial& f : algebra().monomial_basis(d - 2 * static_cast<int>(i + j)))
          span.push_back(as_vector(antisymmetric_class(i, j).times(f), d));
    row.span_size = span.size();
    row.all_in_kernel = std::all_of(span.begin(), span.end(),
                                    [&](const VectorQ& v) { return cov_->matrix(d).apply(v).is_zero(); });
    row.span_rank = span.empty() ? 0 : rank(SparseMatrix::from_columns(twisted_->dim(d), span));
    row.relations = row.span_size - row.span_rank;
    auto it = mingens.counts.find(d);
    row.minimal_generators = it == mingens.counts.end() ? 0 : it->second;
    row.lambda2_dim = exterior_power_dim(2, d);
    row.ok = row.all_in_kernel && row.span_rank == row.kernel_dim && row.minimal_generators == row.lambda2_dim;
    report.degrees[slot] = row;
  });

  report.ok = true;
  for (const auto& row : report.degrees)
    if (!row.ok) {
      report.ok = false;
      report.counterexample_degree = row.internal_degree;
      report.failure = !row.all_in_kernel                ? "some M_{i,j} multiple is not in the kernel"
                       : row.span_rank != row.kernel_dim ? "the M_{i,j} do not span the kernel"
                                                         : "minimal generator count differs from dim Lambda^2 E";
      break;
    }

  for (unsigned i = 1; 2 * static_cast<int>(i + (i + 1) + (i + 2)) <= up_to; ++i)
    for (unsigned j = i + 1; 2 * static_cast<int>(i + j + j + 1) <= up_to; ++j)
      for (unsigned k = j + 1; 2 * static_cast<int>(i + j + k) <= up_to; ++k) {
        ++report.syzygies_checked;
        const TwistedElement s = antisymmetric_class(j, k).times(Monomial::generator(i)) +
                                 antisymmetric_class(k, i).times(Monomial::generator(j)) +
                                 antisymmetric_class(i, j).times(Monomial::generator(k));
        const int d = 2 * static_cast<int>(i + j + k);
        if (!s.is_zero() || !as_vector(s, d).is_zero()) {
          if (report.ok) {
            report.ok = false;
            report.counterexample_degree = d;
            report.failure = "syzygy e_i M_jk + e_j M_ki + e_k M_ij is nonzero";
          }
        }
      }
  return report;
}

TorReport StableCohomology::verify_tor(int j_max, int up_to) const {
  tilde_->bound().require(up_to, "verify_tor");
  if (j_max < 0) throw std::invalid_argument("verify_tor: negative j_max");
  std::vector<TorEntry> entries;
  for (int j = 0; j <= j_max; ++j)
    for (int d = 0; d <= up_to; d += 2) entries.push_back({j, d, 0, 0});

  parallel_for(entries.size(), jobs_, [&](std::size_t k) {
    TorEntry& e = entries[k];
    e.computed = tor(*tilde_, e.j, e.internal_degree);
    e.expected = e.j == 0 ? exterior_power_dim(2, e.internal_degree) + (e.internal_degree == 0 ? 1 : 0)
                          : exterior_power_dim(e.j, e.internal_degree) + exterior_power_dim(e.j + 2, e.internal_degree);
  });

  TorReport report;
  for (const auto& e : entries) {
    if (e.computed != e.expected) report.mismatches.push_back(e);
    if (e.j == 1 && e.computed > 0) report.non_free = true;
  }
  report.entries = std::move(entries);
  report.ok = report.mismatches.empty();
  return report;
}

std::vector<SequenceAuditEntry> StableCohomology::exact_sequence_audit(int up_to) const {
  bound().require(up_to, "exact_sequence_audit");
  std::vector<SequenceAuditEntry> out;
  for (int d = 0; d <= up_to; d += 2) {
    SequenceAuditEntry e;
    e.internal_degree = d;
    e.kernel_dim = kernel_->module->dim(d);
    e.twisted_dim = twisted_->dim(d);
    e.algebra_dim = algebra().hilbert_function(d);
    e.augmentation_dim = d == 0 ? 1 : 0;
    // also demand exactness at F: the kernel is exactly ker(F -> A)
    const std::size_t image = rank(cov_->matrix(d));
    const long alternating = static_cast<long>(e.kernel_dim) - static_cast<long>(e.twisted_dim) +
                             static_cast<long>(e.algebra_dim) - static_cast<long>(e.augmentation_dim);
    e.ok = alternating == 0 && e.kernel_dim + image == e.twisted_dim &&
           image + e.augmentation_dim == e.algebra_dim;
    out.push_back(e);
  }
  return out;
}

std::vector<CrossOracleEntry> StableCohomology::cross_oracle(int up_to) const {
  bound().require(up_to, "cross_oracle");
  std::vector<int> degrees;
  for (int d = 2; d <= up_to; d += 2) degrees.push_back(d);
  std::vector<CrossOracleEntry> out(degrees.size());
  parallel_for(degrees.size(), jobs_, [&](std::size_t k) {
    const int d = degrees[k];
    const SparseMatrix contraction = forms_.interior_product(1, d);
    CrossOracleEntry& e = out[k];
    e.internal_degree = d;
    e.delta_kernel_dim = kernel_basis(cov_->matrix(d)).size();
    e.contraction_kernel_dim = kernel_basis(contraction).size();
    e.matrices_intertwine = cov_->matrix(d) == contraction * Rational(-1);
  });
  return out;
}

}  // namespace stabcoh
