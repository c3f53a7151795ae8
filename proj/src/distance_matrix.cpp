#include "arbcycle/distance_matrix.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace arbcycle {

DistanceMatrix::DistanceMatrix(std::size_t n, Weight fill)
    : n_(n), data_(n * n, fill < kInf ? fill : kInf) {
  if (fill < 0) throw std::invalid_argument("negative fill");
}

DistanceMatrix DistanceMatrix::adjacency(std::size_t n, std::span<const WeightedEdge> edges,
                                         Weight diagonal) {
  DistanceMatrix m(n, kInf);
  for (NodeIndex u = 0; u < n; ++u) m(u, u) = diagonal;
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) throw std::out_of_range("edge endpoint out of range");
    if (e.weight < 0) throw std::invalid_argument("negative edge weight");
    if (e.from == e.to) throw std::invalid_argument("self loop in adjacency");
    if (e.weight < m(e.from, e.to)) m(e.from, e.to) = e.weight < kInf ? e.weight : kInf;
  }
  return m;
}

Weight DistanceMatrix::at(NodeIndex u, NodeIndex v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("distance matrix index");
  return (*this)(u, v);
}

void DistanceMatrix::set(NodeIndex u, NodeIndex v, Weight w) {
  if (u >= n_ || v >= n_) throw std::out_of_range("distance matrix index");
  if (w < 0) throw std::invalid_argument("negative distance");
  (*this)(u, v) = w < kInf ? w : kInf;
}

DistanceMatrix DistanceMatrix::with_diagonal(Weight w) const {
  DistanceMatrix copy = *this;
  for (NodeIndex u = 0; u < n_; ++u) copy(u, u) = w < kInf ? w : kInf;
  return copy;
}

DistanceMatrix read_distance_matrix(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n)) throw std::runtime_error("distance matrix: missing dimension");
  DistanceMatrix m(n);
  std::string token;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (!(in >> token)) throw std::runtime_error("distance matrix: truncated input");
      if (token == "inf") {
        m(u, v) = kInf;
        continue;
      }
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0)
        throw std::runtime_error("distance matrix: bad entry '" + token + "'");
      m.set(u, v, value);
    }
  }
  return m;
}

void write_distance_matrix(std::ostream& out, const DistanceMatrix& m) {
  out << m.size() << '\n';
  for (NodeIndex u = 0; u < m.size(); ++u) {
    for (NodeIndex v = 0; v < m.size(); ++v) {
      if (v) out << ' ';
      if (is_finite(m(u, v)))
        out << m(u, v);
      else
        out << "inf";
    }
    out << '\n';
  }
}

}  // namespace arbcycle
