#include "stabcoh/group_cohomology.hpp"

#include <cstdlib>

namespace stabcoh {

Word freely_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

GroupPresentation::GroupPresentation(std::size_t num_generators, std::vector<Word> relators)
    : num_generators_(num_generators) {
  for (const Word& w : relators) {
    for (int letter : w)
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > num_generators)
        throw PresentationError("relator letter " + std::to_string(letter) + " does not name a generator");
    relators_.push_back(freely_reduce(w));
  }
}

MatrixRep::MatrixRep(const GroupPresentation& presentation, std::size_t dimension,
                     std::vector<SparseMatrix> images)
    : dimension_(dimension), images_(std::move(images)) {
  if (images_.size() != presentation.num_generators())
    throw PresentationError("expected " + std::to_string(presentation.num_generators()) +
                            " generator matrices, got " + std::to_string(images_.size()));
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const SparseMatrix& m = images_[k];
    if (m.rows() != dimension_ || m.cols() != dimension_)
      throw PresentationError("matrix of generator " + std::to_string(k + 1) + " is not " +
                              std::to_string(dimension_) + "x" + std::to_string(dimension_));
    auto inv = inverse(m);
    if (!inv) throw PresentationError("matrix of generator " + std::to_string(k + 1) + " is not invertible");
    inverses_.push_back(std::move(*inv));
  }
  const SparseMatrix one = SparseMatrix::identity(dimension_);
  for (std::size_t r = 0; r < presentation.relators().size(); ++r)
    if (evaluate_word(*this, presentation.relators()[r]) != one)
      throw PresentationError("relator " + std::to_string(r + 1) + " does not evaluate to identity");
}

MatrixRep MatrixRep::conjugated(const GroupPresentation& presentation, const SparseMatrix& p) const {
  auto p_inv = inverse(p);
  if (!p_inv) throw PresentationError("conjugating matrix is not invertible");
  std::vector<SparseMatrix> images;
  for (const auto& m : images_) images.push_back(p * m * *p_inv);
  return MatrixRep(presentation, dimension_, std::move(images));
}

SparseMatrix evaluate_word(const MatrixRep& rep, const Word& w) {
  SparseMatrix acc = SparseMatrix::identity(rep.dimension());
  for (int letter : w) {
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > rep.num_generators())
      throw PresentationError("letter " + std::to_string(letter) + " does not name a generator");
    const std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    acc = acc * (letter > 0 ? rep.image(g) : rep.inverse_image(g));
  }
  return acc;
}

SparseMatrix cocycle_conditions(const GroupPresentation& presentation, const MatrixRep& rep) {
  const std::size_t n = rep.dimension();
  const std::size_t unknowns = presentation.num_generators() * n;
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < presentation.relators().size(); ++r) {
    // f(y_1 ... y_k) = sum_j rho(y_1 ... y_{j-1}) c_j with c_j = f(x) for
    // y_j = x and c_j = -rho(x)^{-1} f(x) for y_j = x^{-1}
    SparseMatrix prefix = SparseMatrix::identity(n);
    for (int letter : presentation.relators()[r]) {
      const std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
      const SparseMatrix block =
          letter > 0 ? prefix : prefix * rep.inverse_image(g) * Rational(-1);
      for (std::size_t row = 0; row < n; ++row)
        for (const auto& [col, v] : block.row(row)) triplets.push_back({r * n + row, g * n + col, v});
      prefix = prefix * (letter > 0 ? rep.image(g) : rep.inverse_image(g));
    }
  }
  return SparseMatrix(presentation.relators().size() * n, unknowns, std::move(triplets));
}

std::vector<VectorQ> cocycle_space(const GroupPresentation& presentation, const MatrixRep& rep) {
  return kernel_basis(cocycle_conditions(presentation, rep));
}

SparseMatrix coboundary_map(const MatrixRep& rep) {
  const std::size_t n = rep.dimension();
  const SparseMatrix one = SparseMatrix::identity(n);
  std::vector<SparseMatrix> blocks;
  for (std::size_t g = 0; g < rep.num_generators(); ++g) blocks.push_back(rep.image(g) - one);
  return SparseMatrix::vstack(blocks, n);
}

std::vector<VectorQ> coboundary_space(const MatrixRep& rep) {
  return column_space_basis(coboundary_map(rep));
}

std::size_t h1_dimension(const GroupPresentation& presentation, const MatrixRep& rep) {
  return cocycle_space(presentation, rep).size() - coboundary_space(rep).size();
}

// ------------------------------------------------------------------ input

namespace {

Rational entry(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw PresentationError(e.what());
    }
  }
  throw PresentationError("matrix entries must be integers or \"p/q\" strings");
}

}  // namespace

GroupInput parse_group_input(const nlohmann::json& document) {
  if (!document.is_object()) throw PresentationError("group input must be a JSON object");
  if (!document.contains("generators") || !document["generators"].is_number_unsigned())
    throw PresentationError("\"generators\" must be a nonnegative integer");
  const auto n = document["generators"].get<std::size_t>();

  std::vector<Word> relators;
  if (document.contains("relators")) {
    if (!document["relators"].is_array()) throw PresentationError("\"relators\" must be an array");
    for (const auto& w : document["relators"]) {
      if (!w.is_array()) throw PresentationError("each relator must be an array of signed indices");
      Word word;
      for (const auto& letter : w) {
        if (!letter.is_number_integer()) throw PresentationError("relator letters must be integers");
        word.push_back(letter.get<int>());
      }
      relators.push_back(std::move(word));
    }
  }
  GroupPresentation presentation(n, std::move(relators));

  if (!document.contains("matrices") || !document["matrices"].is_array())
    throw PresentationError("\"matrices\" must be an array of square matrices");
  std::vector<SparseMatrix> images;
  std::size_t dimension = 0;
  if (document.contains("dimension")) dimension = document["dimension"].get<std::size_t>();
  for (const auto& m : document["matrices"]) {
    if (!m.is_array()) throw PresentationError("each matrix must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : m) {
      if (!row.is_array()) throw PresentationError("matrix rows must be arrays");
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(entry(v));
      if (r.size() != m.size()) throw PresentationError("generator matrices must be square");
      rows.push_back(std::move(r));
    }
    if (images.empty() && !document.contains("dimension")) dimension = rows.size();
    images.push_back(rows.empty() ? SparseMatrix(0, 0) : SparseMatrix::from_dense(rows));
  }
  MatrixRep rep(presentation, dimension, std::move(images));
  return GroupInput{std::move(presentation), std::move(rep)};
}

}  // namespace stabcoh
