#include "cmsym/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "cmsym/errors.hpp"

namespace cmsym {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "QQ") return rationals();
  if (text.size() > 3 && (text.substr(0, 3) == "Fp:" || text.substr(0, 3) == "fp:")) {
    std::uint64_t p = 0;
    const auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && p < (std::uint64_t{1} << 31)) {
      return prime(static_cast<std::uint32_t>(p));
    }
  }
  throw InputError("unrecognised field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

std::string FieldSpec::to_string() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p_); }

namespace {

std::size_t rank_mod_p(Matrix m, std::uint64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto inverse = [p](std::uint64_t a) {
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = (m(i, k) % sp + sp) % sp;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = c; k < cols; ++k) std::swap(m(pivot, k), m(r, k));
    }
    const auto inv = static_cast<std::int64_t>(inverse(static_cast<std::uint64_t>(m(r, c))));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const auto factor = static_cast<std::uint64_t>(m(i, c)) * static_cast<std::uint64_t>(inv) % p;
      for (std::size_t k = c; k < cols; ++k) {
        const auto sub = factor * static_cast<std::uint64_t>(m(r, k)) % p;
        m(i, k) = static_cast<std::int64_t>((static_cast<std::uint64_t>(m(i, k)) + p - sub) % p);
      }
    }
    ++r;
  }
  return r;
}

// Fraction-free elimination; entries stay integral minors of the input.
template <class Int, class Step>
std::optional<std::size_t> bareiss_rank(std::vector<Int>& a, std::size_t rows, std::size_t cols, Step step) {
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * cols + c]; };
  Int previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(r, k));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        if (!step(at(i, k), at(r, c), at(i, c), at(r, k), previous)) return std::nullopt;
      }
      at(i, c) = 0;
    }
    previous = at(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_rational(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> small(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) small[r * cols + c] = m(r, c);
  }
  auto checked = [](std::int64_t& target, std::int64_t pivot, std::int64_t lead, std::int64_t row, std::int64_t prev) {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(pivot, target, &x) || __builtin_mul_overflow(lead, row, &y) ||
        __builtin_sub_overflow(x, y, &diff)) {
      return false;
    }
    target = diff / prev;
    return true;
  };
  if (auto r = bareiss_rank(small, rows, cols, checked)) return *r;

  std::vector<mpz_class> big(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) big[r * cols + c] = static_cast<long>(m(r, c));
  }
  auto exact = [](mpz_class& target, const mpz_class& pivot, const mpz_class& lead, const mpz_class& row,
                  const mpz_class& prev) {
    mpz_class numerator = pivot * target - lead * row;
    mpz_divexact(target.get_mpz_t(), numerator.get_mpz_t(), prev.get_mpz_t());
    return true;
  };
  return *bareiss_rank(big, rows, cols, exact);
}

// Faces of a complex grouped by size, each group in lexicographic order.
struct FaceTable {
  std::vector<std::vector<VertexSet>> by_size;

  explicit FaceTable(const SimplicialComplex& complex) {
    by_size.resize(static_cast<std::size_t>(std::max(complex.dimension(), -1) + 2));
    for (VertexSet f : complex.faces()) by_size[static_cast<std::size_t>(f.size())].push_back(f);
  }

  const std::vector<VertexSet>& of_dimension(int j) const {
    static const std::vector<VertexSet> none;
    const auto size = static_cast<std::size_t>(j + 1);
    return size < by_size.size() ? by_size[size] : none;
  }

  std::size_t index(int j, VertexSet f) const {
    const auto& group = of_dimension(j);
    return static_cast<std::size_t>(std::lower_bound(group.begin(), group.end(), f, lex_less) - group.begin());
  }
};

Matrix boundary_from_table(const FaceTable& table, int j, const FieldSpec& field) {
  const auto& columns = table.of_dimension(j);
  if (j == -1) return Matrix(0, columns.size());
  const auto& rows = table.of_dimension(j - 1);
  Matrix m(rows.size(), columns.size());
  const std::int64_t minus_one = field.is_rational() ? -1 : static_cast<std::int64_t>(field.characteristic()) - 1;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    int position = 0;
    columns[c].for_each([&](int v) {
      const std::size_t r = table.index(j - 1, columns[c].without(v));
      const std::int64_t sign = (position % 2 == 0) ? 1 : minus_one;
      m(r, c) = sign;
      ++position;
    });
  }
  return m;
}

BettiVector homology_from_table(const FaceTable& table, int dim, const FieldSpec& field) {
  // rank ∂_j for j = 0..dim; ∂_{-1} and ∂_{dim+1} vanish.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 3), 0);
  for (int j = 0; j <= dim; ++j) {
    ranks[static_cast<std::size_t>(j + 1)] = rank(boundary_from_table(table, j, field), field);
  }
  std::vector<std::size_t> dims;
  for (int j = -1; j <= dim; ++j) {
    const std::size_t chains = table.of_dimension(j).size();
    dims.push_back(chains - ranks[static_cast<std::size_t>(j + 1)] - ranks[static_cast<std::size_t>(j + 2)]);
  }
  return BettiVector(std::move(dims));
}

template <class Obstruction>
CmVerdict cm_scan(const SimplicialComplex& complex, Obstruction&& obstruction) {
  if (complex.is_void()) throw InputError("Cohen-Macaulay test on the void complex");
  CmVerdict verdict;
  verdict.pure = complex.is_pure();
  for (VertexSet face : complex.faces()) {
    const SimplicialComplex lk = link(complex, face);
    if (auto bad = obstruction(lk)) {
      verdict.witness = HomologyWitness{face, bad->first, bad->second};
      return verdict;
    }
  }
  verdict.cohen_macaulay = true;
  return verdict;
}

}  // namespace

std::size_t rank(const Matrix& m, const FieldSpec& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

Matrix boundary_matrix(const SimplicialComplex& complex, int j, const FieldSpec& field) {
  if (complex.is_void() || j < -1 || j > complex.dimension()) {
    throw InputError("boundary degree " + std::to_string(j) + " out of range");
  }
  return boundary_from_table(FaceTable(complex), j, field);
}

std::size_t BettiVector::at(int j) const {
  const auto index = static_cast<std::ptrdiff_t>(j) + 1;
  if (index < 0 || index >= static_cast<std::ptrdiff_t>(dims_.size())) return 0;
  return dims_[static_cast<std::size_t>(index)];
}

bool BettiVector::all_zero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

BettiVector reduced_homology(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) throw InputError("reduced homology of the void complex");
  return homology_from_table(FaceTable(complex), complex.dimension(), field);
}

std::optional<std::pair<int, std::size_t>> low_homology_obstruction(const SimplicialComplex& complex,
                                                                    const FieldSpec& field) {
  const int dim = complex.dimension();
  if (dim <= -1) return std::nullopt;
  const BettiVector betti = reduced_homology(complex, field);
  for (int j = -1; j < dim; ++j) {
    if (betti.at(j) != 0) return std::pair{j, betti.at(j)};
  }
  return std::nullopt;
}

CmVerdict is_cm_complex(const SimplicialComplex& complex, const FieldSpec& field) {
  return cm_scan(complex, [&](const SimplicialComplex& lk) { return low_homology_obstruction(lk, field); });
}

struct FacetKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::size_t h = key.size();
    for (std::uint64_t k : key) h ^= std::hash<std::uint64_t>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct CmOracle::Cache {
  using Key = std::vector<std::uint64_t>;
  mutable std::shared_mutex mutex;
  std::unordered_map<Key, CmVerdict, FacetKeyHash> verdicts;
  std::unordered_map<Key, std::optional<std::pair<int, std::size_t>>, FacetKeyHash> obstructions;

  static Key key_of(const SimplicialComplex& complex) {
    Key key;
    key.reserve(complex.facet_count());
    for (VertexSet f : complex.facets()) key.push_back(f.bits());
    return key;
  }
};

CmOracle::CmOracle(FieldSpec field) : field_(field), cache_(std::make_unique<Cache>()) {}
CmOracle::~CmOracle() = default;

std::optional<std::pair<int, std::size_t>> CmOracle::low_obstruction(const SimplicialComplex& complex) const {
  auto key = Cache::key_of(complex);
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->obstructions.find(key); it != cache_->obstructions.end()) return it->second;
  }
  auto result = low_homology_obstruction(complex, field_);
  std::unique_lock lock(cache_->mutex);
  cache_->obstructions.emplace(std::move(key), result);
  return result;
}

CmVerdict CmOracle::check(const SimplicialComplex& complex) const {
  auto key = Cache::key_of(complex);
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->verdicts.find(key); it != cache_->verdicts.end()) return it->second;
  }
  CmVerdict verdict = cm_scan(complex, [&](const SimplicialComplex& lk) { return low_obstruction(lk); });
  std::unique_lock lock(cache_->mutex);
  cache_->verdicts.emplace(std::move(key), verdict);
  return verdict;
}

std::size_t CmOracle::cache_size() const {
  std::shared_lock lock(cache_->mutex);
  return cache_->verdicts.size() + cache_->obstructions.size();
}

}  // namespace cmsym
