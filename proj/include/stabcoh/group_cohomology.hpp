#pragma once

// H^1 of a finitely presented group with coefficients in a rational matrix
// representation, as Z^1 / B^1 with the left-action cocycle rule
// f(uv) = f(u) + u.f(v).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "stabcoh/linalg.hpp"

namespace stabcoh {

/// A word is a sequence of letters +k / -k standing for x_k and x_k^{-1}
/// (generators are numbered from 1).
using Word = std::vector<int>;

class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroupPresentation {
 public:
  /// Relators are freely reduced on construction. Throws PresentationError
  /// when a letter is 0 or names a missing generator.
  GroupPresentation(std::size_t num_generators, std::vector<Word> relators);

  std::size_t num_generators() const { return num_generators_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  std::size_t num_generators_;
  std::vector<Word> relators_;
};

Word freely_reduce(const Word& w);

class MatrixRep {
 public:
  /// Throws PresentationError when the image count or a shape is wrong, an
  /// image is singular, or a relator does not evaluate to the identity.
  MatrixRep(const GroupPresentation& presentation, std::size_t dimension, std::vector<SparseMatrix> images);

  std::size_t dimension() const { return dimension_; }
  std::size_t num_generators() const { return images_.size(); }
  const SparseMatrix& image(std::size_t generator) const { return images_.at(generator); }
  const SparseMatrix& inverse_image(std::size_t generator) const { return inverses_.at(generator); }
  /// Same group, representation conjugated: x -> P rho(x) P^{-1}.
  MatrixRep conjugated(const GroupPresentation& presentation, const SparseMatrix& p) const;

 private:
  std::size_t dimension_;
  std::vector<SparseMatrix> images_;
  std::vector<SparseMatrix> inverses_;
};

SparseMatrix evaluate_word(const MatrixRep& rep, const Word& w);

/// Linear conditions on (f(x_1), ..., f(x_n)) in Q^{n * dim}: one block of
/// `dim` rows per relator, assembled by Fox-derivative expansion.
SparseMatrix cocycle_conditions(const GroupPresentation& presentation, const MatrixRep& rep);
/// Basis of Z^1, each vector the concatenated values f(x_1), ..., f(x_n).
std::vector<VectorQ> cocycle_space(const GroupPresentation& presentation, const MatrixRep& rep);
/// v -> ((rho(x_i) - 1) v)_i
SparseMatrix coboundary_map(const MatrixRep& rep);
/// Basis of B^1 in the same coordinates as cocycle_space.
std::vector<VectorQ> coboundary_space(const MatrixRep& rep);
std::size_t h1_dimension(const GroupPresentation& presentation, const MatrixRep& rep);

struct GroupInput {
  GroupPresentation presentation;
  MatrixRep representation;
};

/// {"generators": n, "relators": [[1, 2, -1], ...], "matrices": [[[1, 1], [0, 1]], ...]}
/// Matrix entries are integers or "p/q" strings. Throws PresentationError.
GroupInput parse_group_input(const nlohmann::json& document);

}  // namespace stabcoh
