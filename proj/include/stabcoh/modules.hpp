#pragma once

// Finitely generated graded A-modules, stored degree by degree: a basis
// dimension per internal degree and one action matrix per generator e_i and
// source degree. Kernels, minimal generators and Tor^A(Q, M) via the Koszul
// complex are computed with exact linear algebra on those matrices.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stabcoh/algebra.hpp"

namespace stabcoh {

enum class Parity { even, odd };

/// Thrown when a map fails to commute with the A-action, or a module's
/// actions fail to commute with each other.
class EquivarianceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GradedModule {
 public:
  /// (generator index i, source internal degree d) -> matrix dim(d+2i) x dim(d)
  using ActionTable = std::map<std::pair<unsigned, int>, SparseMatrix>;

  /// `dims[d]` is the dimension in internal degree d (missing entries are 0).
  /// Absent actions are zero. Throws std::invalid_argument on a shape mismatch
  /// and EquivarianceError when two actions fail to commute.
  GradedModule(DegreeBound bound, std::vector<std::size_t> dims, ActionTable actions,
               int cohomological_offset = 0, std::optional<Parity> parity = {});

  const DegreeBound& bound() const { return bound_; }
  std::size_t dim(int d) const;
  /// e_i : M_d -> M_{d+2i}; requires d + 2i within the bound.
  const SparseMatrix& action(unsigned i, int d) const;
  /// cohomological degree = internal degree + offset
  int cohomological_offset() const { return offset_; }
  std::optional<Parity> parity() const { return parity_; }
  /// Largest generator index whose action is recorded (bound / 2).
  unsigned max_generator() const { return static_cast<unsigned>(bound_.value() / 2); }

  bool actions_commute() const;

 private:
  DegreeBound bound_;
  std::vector<std::size_t> dims_;
  // actions_[d][i - 1]
  std::vector<std::vector<SparseMatrix>> actions_;
  int offset_;
  std::optional<Parity> parity_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

/// Free module with one generator per listed internal degree. The basis of
/// degree d is generator-major: (g_0, monomials of degree d - deg g_0), then g_1...
GradedModule free_module(const SymAlgebra& algebra, const std::vector<int>& generator_degrees,
                         int cohomological_offset = 0, std::optional<Parity> parity = {});
/// Q in a single degree with every e_i acting by zero.
GradedModule trivial_module(DegreeBound bound, int degree, int cohomological_offset = 0);
/// Bases concatenated degreewise: first `a`, then `b`. Both must share the bound.
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

class GradedModuleMap {
 public:
  /// `matrices[d]` maps source degree d to target degree d + internal_shift;
  /// absent degrees are zero. Throws EquivarianceError when the map does not
  /// commute with some e_i.
  GradedModuleMap(ModulePtr source, ModulePtr target, int internal_shift,
                  std::map<int, SparseMatrix> matrices);

  const GradedModule& source() const { return *source_; }
  const GradedModule& target() const { return *target_; }
  const ModulePtr& source_ptr() const { return source_; }
  const ModulePtr& target_ptr() const { return target_; }
  int internal_shift() const { return shift_; }
  /// Shift measured in cohomological degree, using each side's offset.
  int cohomological_shift() const;

  /// Source degrees at which the map is recorded (both ends inside the bounds).
  bool defined_at(int d) const;
  int max_defined_degree() const;
  const SparseMatrix& matrix(int d) const;

 private:
  ModulePtr source_;
  ModulePtr target_;
  int shift_;
  std::map<int, SparseMatrix> matrices_;
};

struct KernelModule {
  ModulePtr module;
  GradedModuleMap inclusion;
};

/// Per-degree kernel of f with the induced A-action. The kernel's bound is the
/// largest even degree at which f is recorded.
KernelModule kernel_module(const GradedModuleMap& f, unsigned jobs = 1);

struct MinimalGenerators {
  /// Nonzero counts only.
  std::map<int, std::size_t> counts;
  /// Vectors of M_d spanning a complement of sum_i e_i M_{d-2i}.
  std::map<int, std::vector<VectorQ>> representatives;
};

/// dim M_d / (sum_i e_i M_{d-2i}) for d <= up_to.
MinimalGenerators minimal_generators(const GradedModule& m, int up_to, unsigned jobs = 1);

/// Dimension of (Lambda^j E ⊗ M)_d.
std::size_t koszul_chain_dim(const GradedModule& m, int j, int d);
/// Koszul differential (Lambda^j E ⊗ M)_d -> (Lambda^{j-1} E ⊗ M)_d,
/// e_S ⊗ x -> sum_k (-1)^{k+1} e_{S minus s_k} ⊗ e_{s_k} x.
SparseMatrix koszul_boundary(const GradedModule& m, int j, int d);
/// dim Tor_j^A(Q, M)_d as homology of the Koszul complex.
std::size_t tor(const GradedModule& m, int j, int d);

}  // namespace stabcoh
