#include "doctest.h"

#include <random>

#include "stabcoh/group_cohomology.hpp"
#include "stabcoh/report.hpp"

using namespace stabcoh;

namespace {

SparseMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    q.emplace_back();
    for (long x : r) q.back().push_back(Rational(x));
  }
  return SparseMatrix::from_dense(q);
}

bool contains_all(const std::vector<VectorQ>& space, const std::vector<VectorQ>& vectors, std::size_t dim) {
  if (vectors.empty()) return true;
  const auto s = SparseMatrix::from_columns(dim, space);
  for (const auto& v : vectors)
    if (!solve(s, v).has_value()) return false;
  return true;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(freely_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(freely_reduce({1, -1}).empty());
  CHECK_THROWS_AS(GroupPresentation(2, {{1, 3}}), PresentationError);
  CHECK_THROWS_AS(GroupPresentation(2, {{0}}), PresentationError);
}

TEST_CASE("evaluate_word examples") {
  const auto b3 = braid_group_b3();
  const auto& rep = b3.representation;
  CHECK(evaluate_word(rep, {}) == SparseMatrix::identity(2));
  CHECK(evaluate_word(rep, {1}) == mat({{1, 1}, {0, 1}}));
  CHECK(evaluate_word(rep, {1, 2, 1, -2, -1, -2}) == SparseMatrix::identity(2));
  CHECK(evaluate_word(rep, {-1}) == mat({{1, -1}, {0, 1}}));
}

TEST_CASE("relator validation") {
  const GroupPresentation p(1, {{1, 1}});
  CHECK_THROWS_WITH_AS(MatrixRep(p, 1, {mat({{2}})}), doctest::Contains("does not evaluate to identity"),
                       PresentationError);
  CHECK_NOTHROW(MatrixRep(p, 1, {mat({{-1}})}));
  CHECK_THROWS_AS(MatrixRep(GroupPresentation(1, {}), 1, {mat({{0}})}), PresentationError);
  CHECK_THROWS_AS(MatrixRep(GroupPresentation(2, {}), 1, {mat({{1}})}), PresentationError);
}

TEST_CASE("cocycle and coboundary examples") {
  const GroupPresentation free2(2, {});
  const MatrixRep trivial2(free2, 2, {SparseMatrix::identity(2), SparseMatrix::identity(2)});
  CHECK(cocycle_space(free2, trivial2).size() == 4);
  CHECK(coboundary_space(trivial2).empty());

  const auto b3 = braid_group_b3();
  CHECK(cocycle_space(b3.presentation, b3.representation).size() == 2);
  CHECK(coboundary_space(b3.representation).size() == 2);
  CHECK(h1_dimension(b3.presentation, b3.representation) == 0);

  const GroupPresentation trivial_group(0, {});
  const MatrixRep empty(trivial_group, 0, {});
  CHECK(h1_dimension(trivial_group, empty) == 0);
  const MatrixRep on_q2(trivial_group, 2, {});
  CHECK(coboundary_space(on_q2).empty());

  const GroupPresentation free1(1, {});
  const MatrixRep one(free1, 1, {SparseMatrix::identity(1)});
  CHECK(h1_dimension(free1, one) == 1);

  // Z/2 acting on Q by the sign: H^1 vanishes over Q
  const GroupPresentation z2(1, {{1, 1}});
  CHECK(h1_dimension(z2, MatrixRep(z2, 1, {mat({{-1}})})) == 0);
  // Z^2 = <a, b | a b a^-1 b^-1> with trivial Q coefficients: Hom(Z^2, Q)
  const GroupPresentation z2z2(2, {{1, 2, -1, -2}});
  CHECK(h1_dimension(z2z2, MatrixRep(z2z2, 1, {mat({{1}}), mat({{1}})})) == 2);
}

TEST_CASE("property: B1 inside Z1 and conjugation invariance") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> entry(-3, 3);
  const auto b3 = braid_group_b3();
  const GroupPresentation z2z2(2, {{1, 2, -1, -2}});
  const GroupPresentation free2(2, {});
  struct Case {
    GroupPresentation p;
    MatrixRep r;
  };
  std::vector<Case> cases{{b3.presentation, b3.representation},
                          {z2z2, MatrixRep(z2z2, 2, {mat({{1, 1}, {0, 1}}), mat({{1, 3}, {0, 1}})})},
                          {free2, MatrixRep(free2, 2, {mat({{2, 1}, {1, 1}}), mat({{0, -1}, {1, 0}})})}};
  for (const auto& [p, r] : cases) {
    const auto z1 = cocycle_space(p, r);
    const auto b1 = coboundary_space(r);
    const std::size_t n = p.num_generators() * r.dimension();
    CHECK(contains_all(z1, b1, n));
    const std::size_t h = z1.size() - b1.size();
    CHECK(h == h1_dimension(p, r));
    for (int trial = 0; trial < 10; ++trial) {
      SparseMatrix q;
      do {
        q = mat({{entry(rng), entry(rng)}, {entry(rng), entry(rng)}});
      } while (!inverse(q).has_value());
      CHECK(h1_dimension(p, r.conjugated(p, q)) == h);
    }
  }
}

TEST_CASE("parse group input") {
  const auto doc = nlohmann::json::parse(R"({"generators": 2, "relators": [[1, 2, 1, -2, -1, -2]],
    "matrices": [[[1, 1], [0, 1]], [[1, 0], ["-1", "2/2"]]]})");
  const auto in = parse_group_input(doc);
  CHECK(h1_dimension(in.presentation, in.representation) == 0);
  CHECK_THROWS_AS(parse_group_input(nlohmann::json::parse(R"({"generators": 1, "relators": [], "matrices": []})")),
                  PresentationError);
  CHECK_THROWS_AS(parse_group_input(nlohmann::json::parse(R"({"generators": 1, "relators": [[1]],
    "matrices": [[[2]]]})")),
                  PresentationError);
}
