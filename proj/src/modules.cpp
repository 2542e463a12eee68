#include "stabcoh/modules.hpp"

#include <algorithm>
#include <string>

#include "stabcoh/parallel.hpp"

namespace stabcoh {

// ------------------------------------------------------------ GradedModule

GradedModule::GradedModule(DegreeBound bound, std::vector<std::size_t> dims, ActionTable actions,
                           int cohomological_offset, std::optional<Parity> parity)
    : bound_(bound), dims_(std::move(dims)), offset_(cohomological_offset), parity_(parity) {
  const int top = bound_.value();
  if (dims_.size() > static_cast<std::size_t>(top) + 1)
    throw std::invalid_argument("module dimensions extend past the degree bound");
  dims_.resize(static_cast<std::size_t>(top) + 1, 0);

  actions_.resize(dims_.size());
  for (int d = 0; d <= top; ++d)
    for (unsigned i = 1; d + 2 * static_cast<int>(i) <= top; ++i)
      actions_[d].emplace_back(dim(d + 2 * static_cast<int>(i)), dim(d));

  for (auto& [key, m] : actions) {
    const auto [i, d] = key;
    if (i == 0 || !bound_.contains(d) || !bound_.contains(d + 2 * static_cast<int>(i)))
      throw std::invalid_argument("action outside the degree bound");
    if (m.rows() != dim(d + 2 * static_cast<int>(i)) || m.cols() != dim(d))
      throw std::invalid_argument("action of e" + std::to_string(i) + " in degree " +
                                  std::to_string(d) + " has the wrong shape");
    actions_[d][i - 1] = std::move(m);
  }
  if (!actions_commute()) throw EquivarianceError("module actions do not commute");
}

std::size_t GradedModule::dim(int d) const {
  if (d < 0 || d >= static_cast<int>(dims_.size())) return 0;
  return dims_[static_cast<std::size_t>(d)];
}

const SparseMatrix& GradedModule::action(unsigned i, int d) const {
  if (i == 0 || !bound_.contains(d) || !bound_.contains(d + 2 * static_cast<int>(i)))
    throw std::out_of_range("action of e" + std::to_string(i) + " from degree " +
                            std::to_string(d) + " leaves the degree bound");
  return actions_[static_cast<std::size_t>(d)][i - 1];
}

bool GradedModule::actions_commute() const {
  const int top = bound_.value();
  for (int d = 0; d <= top; ++d) {
    if (dim(d) == 0) continue;
    for (unsigned i = 1; d + 2 * static_cast<int>(i) <= top; ++i)
      for (unsigned j = i + 1; d + 2 * static_cast<int>(i + j) <= top; ++j) {
        const int di = d + 2 * static_cast<int>(i);
        const int dj = d + 2 * static_cast<int>(j);
        if (action(j, di) * action(i, d) != action(i, dj) * action(j, d)) return false;
      }
  }
  return true;
}

GradedModule free_module(const SymAlgebra& algebra, const std::vector<int>& generator_degrees,
                         int cohomological_offset, std::optional<Parity> parity) {
  const DegreeBound& bound = algebra.bound();
  const int top = bound.value();
  for (int g : generator_degrees) bound.require(g, "free_module generator");

  // offsets[d][g] = start of generator g's block in degree d
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
  for (int d = 0; d <= top; ++d) {
    std::size_t total = 0;
    for (int g : generator_degrees) {
      offsets[d].push_back(total);
      if (d >= g) total += algebra.hilbert_function(d - g);
    }
    dims[d] = total;
  }

  GradedModule::ActionTable actions;
  for (int d = 0; d <= top; ++d)
    for (unsigned i = 1; d + 2 * static_cast<int>(i) <= top; ++i) {
      const int t = d + 2 * static_cast<int>(i);
      const Monomial ei = Monomial::generator(i);
      std::vector<Triplet> triplets;
      for (std::size_t g = 0; g < generator_degrees.size(); ++g) {
        const int gd = generator_degrees[g];
        if (d < gd) continue;
        const auto& basis = algebra.monomial_basis(d - gd);
        for (std::size_t k = 0; k < basis.size(); ++k)
          triplets.push_back({offsets[t][g] + algebra.index_of(basis[k] * ei), offsets[d][g] + k, Rational(1)});
      }
      actions.emplace(std::make_pair(i, d), SparseMatrix(dims[t], dims[d], std::move(triplets)));
    }
  return GradedModule(bound, std::move(dims), std::move(actions), cohomological_offset, parity);
}

GradedModule trivial_module(DegreeBound bound, int degree, int cohomological_offset) {
  bound.require(degree, "trivial_module");
  std::vector<std::size_t> dims(static_cast<std::size_t>(bound.value()) + 1, 0);
  dims[static_cast<std::size_t>(degree)] = 1;
  return GradedModule(bound, std::move(dims), {}, cohomological_offset);
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (a.bound().value() != b.bound().value())
    throw std::invalid_argument("direct_sum: modules have different degree bounds");
  const int top = a.bound().value();
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) dims[d] = a.dim(d) + b.dim(d);

  GradedModule::ActionTable actions;
  for (int d = 0; d <= top; ++d)
    for (unsigned i = 1; d + 2 * static_cast<int>(i) <= top; ++i) {
      const int t = d + 2 * static_cast<int>(i);
      std::vector<Triplet> triplets;
      const SparseMatrix& ma = a.action(i, d);
      const SparseMatrix& mb = b.action(i, d);
      for (std::size_t r = 0; r < ma.rows(); ++r)
        for (const auto& [c, v] : ma.row(r)) triplets.push_back({r, c, v});
      for (std::size_t r = 0; r < mb.rows(); ++r)
        for (const auto& [c, v] : mb.row(r)) triplets.push_back({a.dim(t) + r, a.dim(d) + c, v});
      actions.emplace(std::make_pair(i, d), SparseMatrix(dims[t], dims[d], std::move(triplets)));
    }
  // Mixed offsets (e.g. a degree-0 class next to odd classes) collapse to the
  // internal grading; the parity tag survives only when both sides agree.
  const bool same_offset = a.cohomological_offset() == b.cohomological_offset();
  const bool same_parity = a.parity() == b.parity();
  return GradedModule(a.bound(), std::move(dims), std::move(actions),
                      same_offset ? a.cohomological_offset() : 0,
                      same_parity ? a.parity() : std::nullopt);
}

// --------------------------------------------------------- GradedModuleMap

GradedModuleMap::GradedModuleMap(ModulePtr source, ModulePtr target, int internal_shift,
                                 std::map<int, SparseMatrix> matrices)
    : source_(std::move(source)), target_(std::move(target)), shift_(internal_shift) {
  for (auto& [d, m] : matrices) {
    if (!defined_at(d))
      throw std::invalid_argument("module map given outside its range at degree " + std::to_string(d));
    if (m.rows() != target_->dim(d + shift_) || m.cols() != source_->dim(d))
      throw std::invalid_argument("module map has the wrong shape at degree " + std::to_string(d));
  }
  matrices_ = std::move(matrices);
  const int first = std::max(0, -shift_);
  for (int d = first; d <= max_defined_degree(); ++d)
    if (!matrices_.contains(d))
      matrices_.emplace(d, SparseMatrix(target_->dim(d + shift_), source_->dim(d)));

  for (int d = first; d <= max_defined_degree(); ++d)
    for (unsigned i = 1; d + 2 * static_cast<int>(i) <= max_defined_degree(); ++i) {
      const int t = d + 2 * static_cast<int>(i);
      if (target_->action(i, d + shift_) * matrix(d) != matrix(t) * source_->action(i, d))
        throw EquivarianceError("module map does not commute with e" + std::to_string(i) +
                                " at degree " + std::to_string(d));
    }
}

int GradedModuleMap::cohomological_shift() const {
  return shift_ + target_->cohomological_offset() - source_->cohomological_offset();
}

bool GradedModuleMap::defined_at(int d) const {
  return source_->bound().contains(d) && target_->bound().contains(d + shift_);
}

int GradedModuleMap::max_defined_degree() const {
  return std::min(source_->bound().value(), target_->bound().value() - shift_);
}

const SparseMatrix& GradedModuleMap::matrix(int d) const {
  if (!defined_at(d)) throw std::out_of_range("module map not recorded at degree " + std::to_string(d));
  return matrices_.at(d);
}

// ------------------------------------------------------------- kernels

KernelModule kernel_module(const GradedModuleMap& f, unsigned jobs) {
  int top = f.max_defined_degree();
  if (top < 0) throw std::invalid_argument("kernel_module: map is recorded in no degree");
  top -= top % 2;
  const GradedModule& src = f.source();

  std::vector<std::vector<VectorQ>> kernels(static_cast<std::size_t>(top) + 1);
  parallel_for(kernels.size(), jobs, [&](std::size_t d) {
    kernels[d] = kernel_basis(f.matrix(static_cast<int>(d)));
  });

  std::vector<std::size_t> dims(kernels.size());
  std::map<int, SparseMatrix> inclusion;
  for (std::size_t d = 0; d < kernels.size(); ++d) {
    dims[d] = kernels[d].size();
    inclusion.emplace(static_cast<int>(d), SparseMatrix::from_columns(src.dim(static_cast<int>(d)), kernels[d]));
  }

  // e_i maps ker_d into ker_{d+2i}; express the images in the kernel basis.
  std::vector<std::pair<unsigned, int>> keys;
  for (int d = 0; d <= top; ++d)
    for (unsigned i = 1; d + 2 * static_cast<int>(i) <= top; ++i) keys.emplace_back(i, d);
  std::vector<SparseMatrix> induced(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t k) {
    const auto [i, d] = keys[k];
    const int t = d + 2 * static_cast<int>(i);
    std::vector<VectorQ> images;
    for (const VectorQ& v : kernels[d]) images.push_back(src.action(i, d).apply(v));
    const auto coords = solve_many(inclusion.at(t), images);
    std::vector<VectorQ> columns;
    for (const auto& c : coords) {
      if (!c) throw EquivarianceError("e" + std::to_string(i) + " does not preserve the kernel at degree " + std::to_string(d));
      columns.push_back(*c);
    }
    induced[k] = SparseMatrix::from_columns(dims[t], columns);
  });

  GradedModule::ActionTable actions;
  for (std::size_t k = 0; k < keys.size(); ++k) actions.emplace(keys[k], std::move(induced[k]));
  auto module = std::make_shared<const GradedModule>(DegreeBound(top), std::move(dims), std::move(actions),
                                                     src.cohomological_offset(), src.parity());
  return KernelModule{module, GradedModuleMap(module, f.source_ptr(), 0, std::move(inclusion))};
}

// ----------------------------------------------------- minimal generators

namespace {

// Rows spanning sum_i e_i M_{d-2i} inside M_d.
SparseMatrix decomposable_rows(const GradedModule& m, int d) {
  std::vector<SparseMatrix> blocks;
  for (unsigned i = 1; d - 2 * static_cast<int>(i) >= 0; ++i)
    blocks.push_back(m.action(i, d - 2 * static_cast<int>(i)).transpose());
  return SparseMatrix::vstack(blocks, m.dim(d));
}

}  // namespace

MinimalGenerators minimal_generators(const GradedModule& m, int up_to, unsigned jobs) {
  m.bound().require(up_to, "minimal_generators");
  std::vector<std::vector<VectorQ>> reps(static_cast<std::size_t>(up_to) + 1);
  parallel_for(reps.size(), jobs, [&](std::size_t k) {
    const int d = static_cast<int>(k);
    if (m.dim(d) == 0) return;
    const RowEchelon e = row_echelon(decomposable_rows(m, d));
    std::vector<bool> pivot(m.dim(d), false);
    for (std::size_t c : e.pivot_cols) pivot[c] = true;
    for (std::size_t c = 0; c < m.dim(d); ++c)
      if (!pivot[c]) reps[k].push_back(VectorQ::unit(m.dim(d), c));
  });
  MinimalGenerators out;
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (!reps[k].empty()) {
      out.counts.emplace(static_cast<int>(k), reps[k].size());
      out.representatives.emplace(static_cast<int>(k), std::move(reps[k]));
    }
  return out;
}

// --------------------------------------------------------- Koszul complex

namespace {

struct KoszulBlock {
  std::vector<unsigned> wedge;
  int module_degree;
  std::size_t offset;
};

std::vector<KoszulBlock> koszul_blocks(const GradedModule& m, int j, int d, std::size_t& total) {
  std::vector<std::vector<unsigned>> wedges;
  for (int w = j * (j + 1); w <= d; w += 2) {
    auto sets = wedge_index_sets(j, w);
    wedges.insert(wedges.end(), sets.begin(), sets.end());
  }
  std::sort(wedges.begin(), wedges.end());
  std::vector<KoszulBlock> blocks;
  total = 0;
  for (auto& s : wedges) {
    int w = 0;
    for (unsigned i : s) w += 2 * static_cast<int>(i);
    blocks.push_back({std::move(s), d - w, total});
    total += m.dim(d - w);
  }
  return blocks;
}

}  // namespace

std::size_t koszul_chain_dim(const GradedModule& m, int j, int d) {
  if (j < 0) return 0;
  m.bound().require(d, "koszul_chain_dim");
  std::size_t total = 0;
  koszul_blocks(m, j, d, total);
  return total;
}

SparseMatrix koszul_boundary(const GradedModule& m, int j, int d) {
  m.bound().require(d, "koszul_boundary");
  if (j < 1) throw std::invalid_argument("koszul_boundary: j must be >= 1");
  std::size_t src_dim = 0;
  std::size_t dst_dim = 0;
  const auto src = koszul_blocks(m, j, d, src_dim);
  const auto dst = koszul_blocks(m, j - 1, d, dst_dim);
  std::map<std::vector<unsigned>, std::size_t> dst_offset;
  for (const auto& b : dst) dst_offset.emplace(b.wedge, b.offset);

  std::vector<Triplet> triplets;
  for (const auto& block : src) {
    for (std::size_t k = 0; k < block.wedge.size(); ++k) {
      const unsigned i = block.wedge[k];
      std::vector<unsigned> rest = block.wedge;
      rest.erase(rest.begin() + static_cast<long>(k));
      const std::size_t row0 = dst_offset.at(rest);
      const Rational sign = (k % 2 == 0) ? 1 : -1;
      const SparseMatrix& act = m.action(i, block.module_degree);
      for (std::size_t r = 0; r < act.rows(); ++r)
        for (const auto& [c, v] : act.row(r)) triplets.push_back({row0 + r, block.offset + c, sign * v});
    }
  }
  return SparseMatrix(dst_dim, src_dim, std::move(triplets));
}

std::size_t tor(const GradedModule& m, int j, int d) {
  if (j < 0) throw std::invalid_argument("tor: negative homological index");
  m.bound().require(d, "tor");
  const std::size_t chain = koszul_chain_dim(m, j, d);
  if (chain == 0) return 0;
  const std::size_t out_rank = j == 0 ? 0 : rank(koszul_boundary(m, j, d));
  const std::size_t in_rank = rank(koszul_boundary(m, j + 1, d));
  return chain - out_rank - in_rank;
}

}  // namespace stabcoh
