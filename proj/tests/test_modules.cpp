#include "doctest.h"

#include <memory>

#include "oracles.hpp"
#include "stabcoh/forms.hpp"
#include "stabcoh/modules.hpp"

using namespace stabcoh;

namespace {

ModulePtr share(GradedModule m) { return std::make_shared<const GradedModule>(std::move(m)); }

// p_D : Omega^1 -> Omega^0 as a map F -> A of free modules
GradedModuleMap contraction_map(const FormsComplex& fc) {
  const auto omega1 = share(free_module(fc.algebra(), [&] {
    std::vector<int> g;
    for (int l = 1; 2 * l <= fc.bound().value(); ++l) g.push_back(2 * l);
    return g;
  }()));
  const auto omega0 = share(free_module(fc.algebra(), {0}));
  std::map<int, SparseMatrix> mats;
  for (int d = 0; d <= fc.bound().value(); d += 2) mats[d] = fc.interior_product(1, d);
  return GradedModuleMap(omega1, omega0, 0, std::move(mats));
}

}  // namespace

TEST_CASE("free module examples") {
  const SymAlgebra a(DegreeBound(16));
  const auto m = free_module(a, {0});
  for (int d = 0; d <= 16; ++d) CHECK(m.dim(d) == a.hilbert_function(d));
  CHECK(m.actions_commute());

  const FormsComplex fc(DegreeBound(16));
  const auto f = free_module(a, {2, 4, 6, 8, 10, 12, 14, 16});
  for (int d = 0; d <= 16; ++d) {
    CHECK(f.dim(d) == fc.dim(1, d));
    CHECK(f.dim(d) == oracle::free_twisted_dim(d));
  }
  const auto z = free_module(a, {});
  for (int d = 0; d <= 16; ++d) CHECK(z.dim(d) == 0);
}

TEST_CASE("module validation") {
  const DegreeBound b(4);
  GradedModule::ActionTable bad;
  bad[{1, 0}] = SparseMatrix(2, 2);
  CHECK_THROWS_AS(GradedModule(b, {1, 0, 1}, bad), std::invalid_argument);

  // e_1 e_2 = 1 but e_2 e_1 = 0 from degree 0 to 6
  GradedModule::ActionTable t;
  t[{1, 0}] = SparseMatrix::identity(1);
  t[{1, 2}] = SparseMatrix::identity(1);
  t[{2, 0}] = SparseMatrix::identity(1);
  t[{1, 4}] = SparseMatrix::identity(1);
  t[{2, 2}] = SparseMatrix(1, 1);
  CHECK_THROWS_AS(GradedModule(DegreeBound(6), {1, 0, 1, 0, 1, 0, 1}, t), EquivarianceError);
}

TEST_CASE("kernel module examples") {
  const SymAlgebra a(DegreeBound(12));
  const auto m = share(free_module(a, {0, 2}));
  std::map<int, SparseMatrix> id, zero;
  for (int d = 0; d <= 12; ++d) {
    id[d] = SparseMatrix::identity(m->dim(d));
    zero[d] = SparseMatrix(m->dim(d), m->dim(d));
  }
  const auto k_id = kernel_module(GradedModuleMap(m, m, 0, id));
  const auto k_zero = kernel_module(GradedModuleMap(m, m, 0, zero));
  for (int d = 0; d <= 12; ++d) {
    CHECK(k_id.module->dim(d) == 0);
    CHECK(k_zero.module->dim(d) == m->dim(d));
  }

  const FormsComplex fc(DegreeBound(12));
  const auto k = kernel_module(contraction_map(fc), 2);
  CHECK(k.module->dim(6) == 1);
  CHECK(k.module->dim(8) == 2);
  CHECK(k.module->actions_commute());
}

TEST_CASE("non-equivariant map is rejected") {
  const SymAlgebra a(DegreeBound(4));
  const auto m = share(free_module(a, {0}));
  std::map<int, SparseMatrix> mats;
  mats[0] = SparseMatrix::identity(1);
  mats[2] = SparseMatrix(1, 1);
  CHECK_THROWS_AS(GradedModuleMap(m, m, 0, mats), EquivarianceError);
}

TEST_CASE("minimal generators examples") {
  const SymAlgebra a(DegreeBound(16));
  const auto gens = minimal_generators(free_module(a, {0}), 16);
  CHECK(gens.counts == std::map<int, std::size_t>{{0, 1}});

  const FormsComplex fc(DegreeBound(16));
  const auto k = kernel_module(contraction_map(fc));
  const auto kg = minimal_generators(*k.module, 16);
  const auto lam = oracle::exterior_series(2, 16);
  for (int d = 0; d <= 16; ++d) {
    const auto it = kg.counts.find(d);
    CHECK((it == kg.counts.end() ? 0 : it->second) == lam[2][d]);
  }
  CHECK(kg.counts.at(6) == 1);
  CHECK(kg.counts.at(10) == 2);

  const auto zero = minimal_generators(GradedModule(DegreeBound(4), {0, 0, 0, 0, 0}, {}), 4);
  CHECK(zero.counts.empty());
}

TEST_CASE("tor examples") {
  const SymAlgebra a(DegreeBound(16));
  const auto free = free_module(a, {0, 4});
  for (int j = 1; j <= 3; ++j)
    for (int d = 0; d <= 16; ++d) CHECK(tor(free, j, d) == 0);

  const auto theta = trivial_module(DegreeBound(16), 0);
  const auto lam = oracle::exterior_series(5, 16);
  CHECK(tor(theta, 2, 6) == 1);
  for (int j = 0; j <= 4; ++j)
    for (int d = 0; d <= 16; ++d) CHECK(tor(theta, j, d) == lam[j][d]);

  const FormsComplex fc(DegreeBound(16));
  const auto k = kernel_module(contraction_map(fc));
  CHECK(tor(*k.module, 0, 6) == 1);
  for (int j = 0; j <= 2; ++j)
    for (int d = 0; d <= 16; ++d) {
      CAPTURE(j);
      CAPTURE(d);
      CHECK(tor(*k.module, j, d) == lam[j + 2][d]);
    }
}

TEST_CASE("property: tor_0 equals minimal generators and Koszul Euler characteristic") {
  const SymAlgebra a(DegreeBound(14));
  const FormsComplex fc(DegreeBound(14));
  const auto k = kernel_module(contraction_map(fc));
  const std::vector<GradedModule> modules{free_module(a, {0}), free_module(a, {2, 2, 6}),
                                          trivial_module(DegreeBound(14), 4), *k.module,
                                          direct_sum(trivial_module(DegreeBound(14), 0), *k.module)};
  for (const auto& m : modules) {
    CHECK(m.actions_commute());
    const auto gens = minimal_generators(m, 14);
    for (int d = 0; d <= 14; ++d) {
      const auto it = gens.counts.find(d);
      CHECK(tor(m, 0, d) == (it == gens.counts.end() ? 0 : it->second));
      long chain = 0, homology = 0;
      for (int j = 0; j <= 4; ++j) {
        const long sign = j % 2 == 0 ? 1 : -1;
        chain += sign * static_cast<long>(koszul_chain_dim(m, j, d));
        homology += sign * static_cast<long>(tor(m, j, d));
      }
      CHECK(chain == homology);
    }
  }
}

TEST_CASE("koszul boundary squares to zero") {
  const FormsComplex fc(DegreeBound(14));
  const auto k = kernel_module(contraction_map(fc));
  for (int d = 0; d <= 14; d += 2)
    for (int j = 2; j <= 4; ++j) CHECK((koszul_boundary(*k.module, j - 1, d) * koszul_boundary(*k.module, j, d)).is_zero());
}

TEST_CASE("direct sum dims") {
  const SymAlgebra a(DegreeBound(8));
  const auto s = direct_sum(free_module(a, {0}), trivial_module(DegreeBound(8), 0));
  CHECK(s.dim(0) == 2);
  CHECK(s.dim(4) == 2);
  CHECK(s.actions_commute());
}
