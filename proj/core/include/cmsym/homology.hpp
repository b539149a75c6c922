#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmsym/complex.hpp"

namespace cmsym {

/// Coefficient field: ℚ, or 𝔽_p for a prime p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws InputError unless p is prime and below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  /// 0 for ℚ.
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

/// Dense row-major integer matrix. Over 𝔽_p the entries are residues in [0, p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact rank over the field. ℚ uses fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m, const FieldSpec& field);

/// ∂_j : C_j → C_{j-1}, rows indexed by the (j-1)-faces and columns by the
/// j-faces, both in lexicographic order. The sign of vertex position k in an
/// ascending face is (-1)^k. ∂_0 is the augmentation onto the face ∅, and
/// ∂_{-1} is the 0×1 zero map. Throws InputError unless -1 ≤ j ≤ dim Δ.
Matrix boundary_matrix(const SimplicialComplex& complex, int j, const FieldSpec& field);

/// dim_k H̃_j for j = -1 .. top_degree().
class BettiVector {
 public:
  BettiVector() = default;
  explicit BettiVector(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  /// 0 outside the stored range.
  std::size_t at(int j) const;
  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  const std::vector<std::size_t>& raw() const { return dims_; }
  bool all_zero() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Reduced homology over the field. Throws InputError on the void complex.
BettiVector reduced_homology(const SimplicialComplex& complex, const FieldSpec& field);

/// A face F with dim H̃_degree(lk F) = dimension ≠ 0 and degree < dim lk F.
struct HomologyWitness {
  VertexSet face;
  int degree = 0;
  std::size_t dimension = 0;

  friend bool operator==(const HomologyWitness&, const HomologyWitness&) = default;
};

struct CmVerdict {
  bool cohen_macaulay = false;
  bool pure = false;
  std::optional<HomologyWitness> witness;
};

/// Cohen-Macaulay test: H̃_j(lk F) = 0 for every face F (∅ included) and all
/// j < dim lk F. Faces are scanned by increasing dimension, then
/// lexicographically; the first failure is the witness. Purity is reported
/// but not assumed. Throws InputError on the void complex.
CmVerdict is_cm_complex(const SimplicialComplex& complex, const FieldSpec& field);

/// First j < dim Δ with H̃_j(Δ) ≠ 0, as (j, dim).
std::optional<std::pair<int, std::size_t>> low_homology_obstruction(const SimplicialComplex& complex,
                                                                    const FieldSpec& field);

/// Memoizing front end for CM verdicts over one field. Safe to share
/// between threads; cached results are pure functions of the facet list.
class CmOracle {
 public:
  explicit CmOracle(FieldSpec field);
  ~CmOracle();
  CmOracle(const CmOracle&) = delete;
  CmOracle& operator=(const CmOracle&) = delete;

  const FieldSpec& field() const { return field_; }

  CmVerdict check(const SimplicialComplex& complex) const;
  bool is_cm(const SimplicialComplex& complex) const { return check(complex).cohen_macaulay; }
  std::optional<std::pair<int, std::size_t>> low_obstruction(const SimplicialComplex& complex) const;

  std::size_t cache_size() const;

 private:
  struct Cache;
  FieldSpec field_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace cmsym
