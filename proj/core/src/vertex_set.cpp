#include "cmsym/vertex_set.hpp"

#include "cmsym/errors.hpp"

namespace cmsym {

VertexSet VertexSet::of(std::span<const int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw InputError("vertex label " + std::to_string(v) + " outside 1.." +
                       std::to_string(kMaxVertices));
    }
    bits |= std::uint64_t{1} << (v - 1);
  }
  return VertexSet(bits);
}

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  return of(std::span<const int>(vertices.begin(), vertices.size()));
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);
  // Below p the sequences agree. Whoever holds p compares p against the
  // other's next element, which is either larger or absent.
  if ((a.bits() >> p) & 1U) {
    return (b.bits() >> p) != 0;
  }
  return (a.bits() >> p) == 0;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace cmsym
