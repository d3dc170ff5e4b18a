#include "qproc/tree_source.hpp"

namespace qproc::wbp {

VertexAddress::VertexAddress(std::initializer_list<int> symbols) {
  for (int s : symbols) append(s);
}

void VertexAddress::append(int symbol) {
  if (symbol != 1 && symbol != 2)
    throw std::domain_error("vertex symbols are 1 or 2");
  if (symbols_.size() >= kMaxDepth)
    throw std::domain_error("vertex address exceeds max depth");
  symbols_.push_back(static_cast<std::uint8_t>(symbol));
}

VertexAddress VertexAddress::child(int symbol) const {
  VertexAddress c = *this;
  c.append(symbol);
  return c;
}

double uniform_at(std::uint64_t seed, const VertexAddress& v) {
  std::uint64_t state = seed;
  for (std::size_t position = 0; position < v.depth(); ++position) {
    state = mix64(state ^ (static_cast<std::uint64_t>(v.symbol(position)) +
                           kGolden * static_cast<std::uint64_t>(position)));
  }
  return unit_from_word(mix64(state));
}

}  // namespace qproc::wbp
