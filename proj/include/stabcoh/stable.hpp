#pragma once

// Stable cohomology of the mapping class groups with coefficients in
// Q, H_Q, the unit tangent bundle homology H~_Q and its dual, assembled as
// explicit graded objects over A = Q[e_1, e_2, ...]:
//
//   A = H*_st(Q)                       e_i in cohomological degree 2i
//   F = H*_st(H_Q) = ⊕_l A m_{l,1}     m_{l,1} in cohomological degree 2l - 1
//
// F is stored in internal degree (m_{l,1} at internal degree 2l) with a
// cohomological offset of -1. Under m_{i,1} <-> de_i it is Omega^1, with the
// same basis order.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabcoh/forms.hpp"
#include "stabcoh/modules.hpp"

namespace stabcoh {

/// Thrown when a structural statement fails at some degree. Never expected;
/// carries the degree so reports can name a counterexample.
class Falsified : public std::runtime_error {
 public:
  Falsified(std::string what, int degree) : std::runtime_error(std::move(what)), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// f * m_{generator,1}
struct TwistedTerm {
  unsigned generator;
  Monomial coefficient;

  int internal_degree() const { return coefficient.degree() + 2 * static_cast<int>(generator); }
  bool operator==(const TwistedTerm&) const = default;
  /// Internal degree, then generator-major with canonical monomial order.
  bool operator<(const TwistedTerm& other) const;
};

/// Element of F.
class TwistedElement {
 public:
  TwistedElement() = default;
  TwistedElement(TwistedTerm t, const Rational& c = 1);

  const std::map<TwistedTerm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int homogeneous_degree() const;

  void add(const TwistedTerm& t, const Rational& c);
  TwistedElement operator+(const TwistedElement& other) const;
  TwistedElement operator-(const TwistedElement& other) const;
  TwistedElement operator*(const Rational& c) const;
  /// Multiplies every coefficient monomial by f (A-module structure).
  TwistedElement times(const Monomial& f) const;
  bool operator==(const TwistedElement&) const = default;
  std::string to_string() const;

 private:
  std::map<TwistedTerm, Rational> terms_;
};

/// m_{l,1}
TwistedElement twisted_class(unsigned l);
/// M_{i,j} = e_i m_{j,1} - e_j m_{i,1}
TwistedElement antisymmetric_class(unsigned i, unsigned j);

struct TwistedClassSymbol {
  enum class Kind { e, m, M, theta };
  Kind kind;
  unsigned first = 0;
  unsigned second = 0;

  int cohomological_degree() const;
  std::string to_string() const;
};

enum class Coefficients { Q, H, Htilde, HtildeDual };
std::string to_string(Coefficients c);
/// Accepts Q, H, Htilde, HtildeDual. Throws std::invalid_argument otherwise.
Coefficients parse_coefficients(const std::string& label);

struct StableCohomologyTable {
  Coefficients coefficients;
  /// cohomological degree -> dimension, every degree 0..up_to present
  std::map<int, std::size_t> dims;
  /// internal degree -> minimal generator count (Htilde and HtildeDual only)
  std::map<int, std::size_t> generators;
};

struct GeneratorDegreeData {
  int internal_degree = 0;
  std::size_t kernel_dim = 0;
  std::size_t span_size = 0;
  std::size_t span_rank = 0;
  std::size_t relations = 0;
  std::size_t minimal_generators = 0;
  std::size_t lambda2_dim = 0;
  bool all_in_kernel = false;
  bool ok = false;
};

struct GeneratorReport {
  bool ok = false;
  std::optional<int> counterexample_degree;
  std::string failure;
  std::vector<GeneratorDegreeData> degrees;
  /// number of triples i<j<k checked for e_i M_jk + e_j M_ki + e_k M_ij = 0
  std::size_t syzygies_checked = 0;
};

struct TorEntry {
  int j = 0;
  int internal_degree = 0;
  std::size_t computed = 0;
  std::size_t expected = 0;
};

struct TorReport {
  bool ok = false;
  /// some Tor_1 is nonzero, so the module is not free
  bool non_free = false;
  std::vector<TorEntry> entries;
  std::vector<TorEntry> mismatches;
};

struct SequenceAuditEntry {
  int internal_degree = 0;
  std::size_t kernel_dim = 0;
  std::size_t twisted_dim = 0;
  std::size_t algebra_dim = 0;
  std::size_t augmentation_dim = 0;
  bool ok = false;
};

struct CrossOracleEntry {
  int internal_degree = 0;
  std::size_t delta_kernel_dim = 0;
  std::size_t contraction_kernel_dim = 0;
  bool matrices_intertwine = false;
};

/// (Lambda^n E)_d by enumeration of index sets.
std::size_t exterior_power_dim(int n, int d);

class StableCohomology {
 public:
  explicit StableCohomology(DegreeBound bound = DegreeBound{}, unsigned jobs = 1);

  const DegreeBound& bound() const { return forms_.bound(); }
  const SymAlgebra& algebra() const { return forms_.algebra(); }
  const FormsComplex& forms() const { return forms_; }
  /// A as a free module on one generator in degree 0.
  const ModulePtr& base_module() const { return base_; }
  /// F, free on m_{l,1} at internal degree 2l for 2l <= bound.
  const ModulePtr& twisted_module() const { return twisted_; }

  VectorQ as_vector(const TwistedElement& x, int d) const;
  TwistedElement from_vector(const VectorQ& v, int d) const;

  /// A-bilinear pairing with mu(m_{l,1}, m_{l',1}) = -e_{l+l'-1}. Throws
  /// std::out_of_range when the result leaves the bound.
  AlgebraElement contraction_pairing(const TwistedElement& x, const TwistedElement& y) const;

  /// A -> F, 1 |-> m_{1,1}; internal shift +2, cohomological shift +1.
  const GradedModuleMap& delta_contravariant() const { return *contra_; }
  /// F -> A, m_{l,1} |-> mu(m_{1,1}, m_{l,1}) = -e_l; internal shift 0,
  /// cohomological shift +1.
  const GradedModuleMap& delta_covariant() const { return *cov_; }

  /// ker(delta_covariant), i.e. the odd part of H*_st(H~_Q).
  const KernelModule& covariant_kernel() const;
  /// Q theta ⊕ ker(delta_covariant), the full H*_st(H~_Q).
  const GradedModule& tilde_module() const;

  /// Cohomological degrees 0..up_to; up_to must be < bound. Throws Falsified
  /// if delta_contravariant fails to be injective or the cokernel does not
  /// match the free module on {m_{a,1} : a >= 2}.
  StableCohomologyTable tilde_dual_table(int up_to) const;
  /// Cohomological degrees 0..up_to; up_to must be < bound. Throws Falsified
  /// if delta_covariant fails to be onto A_{>0} or its kernel disagrees with
  /// ker(p_D : Omega^1 -> Omega^0).
  StableCohomologyTable tilde_table(int up_to) const;
  /// Dispatches on the label; Q and H are read off the free modules.
  StableCohomologyTable table(Coefficients c, int up_to) const;

  /// Generation of ker(delta_covariant) by the M_{i,j}, internal degrees <= up_to.
  GeneratorReport verify_generators(int up_to) const;
  /// Tor_j(Q, H*_st(H~_Q))_d against dim(Lambda^j E ⊕ Lambda^{j+2} E)_d.
  TorReport verify_tor(int j_max, int up_to) const;
  /// dim ker - dim F + dim A - dim Q = 0 in every internal degree <= up_to.
  std::vector<SequenceAuditEntry> exact_sequence_audit(int up_to) const;
  /// ker(delta_covariant) against ker(p_D : Omega^1 -> Omega^0), and
  /// delta_covariant == -p_D as matrices, for internal degrees 2..up_to.
  std::vector<CrossOracleEntry> cross_oracle(int up_to) const;

 private:
  FormsComplex forms_;
  unsigned jobs_;
  ModulePtr base_;
  ModulePtr twisted_;
  std::optional<GradedModuleMap> contra_;
  std::optional<GradedModuleMap> cov_;
  std::optional<KernelModule> kernel_;
  std::optional<GradedModule> tilde_;
};

}  // namespace stabcoh
