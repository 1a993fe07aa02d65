#include "quiverlab/quiver_core.hpp"

#include <algorithm>

namespace quiverlab {

namespace {

bool is_cyclic_adjacency(const McKayGraph& g) {
  const int d = g.d;
  if (d == 1) return g.adjacency[0][0] == 2;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      int diff = (k - l + d) % d;
      long expected;
      if (d == 2)
        expected = (diff == 1) ? 2 : 0;
      else
        expected = (diff == 1 || diff == d - 1) ? 1 : 0;
      if (g.adjacency[k][l] != expected) return false;
    }
  return true;
}

}  // namespace

McKayGraph cyclic_mckay_graph(int d) {
  if (d < 1) throw std::invalid_argument("cyclic graph needs d >= 1");
  McKayGraph g;
  g.d = d;
  g.v0.assign(d, 1);
  g.adjacency.assign(d, std::vector<long>(d, 0));
  if (d == 1) {
    g.adjacency[0][0] = 2;
  } else if (d == 2) {
    g.adjacency[0][1] = g.adjacency[1][0] = 2;
  } else {
    for (int k = 0; k < d; ++k) {
      g.adjacency[k][(k + 1) % d] += 1;
      g.adjacency[(k + 1) % d][k] += 1;
    }
  }
  return g;
}

DoubleQuiver double_quiver(const McKayGraph& graph) {
  DoubleQuiver q;
  q.vertices = graph.d;
  if (is_cyclic_adjacency(graph)) {
    q.cyclic = true;
    for (int k = 0; k < graph.d; ++k) q.omega.push_back({k, (k + 1) % graph.d});
    return q;
  }
  for (int k = 0; k < graph.d; ++k) {
    if (graph.adjacency[k][k] % 2 != 0)
      throw std::invalid_argument("odd loop multiplicity in McKay graph");
    for (long c = 0; c < graph.adjacency[k][k] / 2; ++c) q.omega.push_back({k, k});
    for (int l = k + 1; l < graph.d; ++l)
      for (long c = 0; c < graph.adjacency[k][l]; ++c) q.omega.push_back({k, l});
  }
  return q;
}

FramedQuiver build_framed_quiver(const McKayGraph& graph, std::vector<int> w) {
  if (static_cast<int>(w.size()) != graph.d)
    throw std::invalid_argument("framing vector length must equal vertex count");
  FramedQuiver fq;
  fq.base = double_quiver(graph);
  fq.w = std::move(w);
  return fq;
}

NumericRep to_numeric(const ExactRep& rep) {
  NumericRep out;
  out.quiver = rep.quiver;
  out.v = rep.v;
  out.w = rep.w;
  auto conv = [](const MatQ& m) {
    MatC c(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int col = 0; col < m.cols(); ++col) c(r, col) = m(r, col).to_complex();
    return c;
  };
  for (const auto& m : rep.b) out.b.push_back(conv(m));
  for (const auto& m : rep.i_map) out.i_map.push_back(conv(m));
  for (const auto& m : rep.j_map) out.j_map.push_back(conv(m));
  return out;
}

GradedRepresentation rep_from_diagram(const YoungDiagram& delta, int d) {
  if (d < 1) throw std::invalid_argument("rep_from_diagram needs d >= 1");
  GradedRepresentation grep;
  grep.diagram = delta;
  grep.d = d;

  McKayGraph graph = cyclic_mckay_graph(d);
  std::vector<int> w(d, 0);
  w[0] = 1;
  FramedQuiver fq = build_framed_quiver(graph, w);

  grep.boxes = delta.boxes();
  std::vector<int> counts(d, 0);
  for (auto [p, q] : grep.boxes) {
    int colour = ((p - q) % d + d) % d;
    grep.box_vertex.push_back(colour);
    grep.box_slot.push_back(counts[colour]++);
  }

  grep.rep = ExactRep::zero(fq, counts);

  auto slot_of = [&](int p, int q) {
    for (size_t b = 0; b < grep.boxes.size(); ++b)
      if (grep.boxes[b].first == p && grep.boxes[b].second == q)
        return std::pair<int, int>(grep.box_vertex[b], grep.box_slot[b]);
    throw std::logic_error("box lookup failed");
  };

  const RationalComplex one{Rational(1), Rational(0)};
  const int e = grep.rep.quiver.edge_count();
  for (size_t bx = 0; bx < grep.boxes.size(); ++bx) {
    auto [p, q] = grep.boxes[bx];
    const int colour = grep.box_vertex[bx];
    const int slot = grep.box_slot[bx];
    if (delta.contains(p + 1, q)) {
      // x arrow: omega[colour] maps colour -> colour+1
      auto [tv, ts] = slot_of(p + 1, q);
      grep.rep.b[colour](ts, slot) = one;
      (void)tv;
    }
    if (delta.contains(p, q + 1)) {
      // y arrow out of `colour` is the reversal of omega[colour-1]
      auto [tv, ts] = slot_of(p, q + 1);
      const int h = e + ((colour - 1 + d) % d);
      grep.rep.b[h](ts, slot) = one;
      (void)tv;
    }
  }
  if (!delta.empty()) {
    auto [tv, ts] = slot_of(0, 0);
    (void)tv;
    grep.rep.i_map[0](ts, 0) = one;
  }
  return grep;
}

DestabilizerScan graded_destabilizer_scan(const GradedRepresentation& grep,
                                          std::span<const Rational> chi) {
  const int nb = static_cast<int>(grep.boxes.size());
  if (nb > 24)
    throw std::invalid_argument("destabilizer scan refuses diagrams with more than 24 boxes");
  if (chi.size() != static_cast<size_t>(grep.d) + 1)
    throw std::invalid_argument("chi must have length d+1");

  // successor mask of each box under the x and y arrows
  std::vector<uint32_t> succ(nb, 0);
  auto index_of = [&](int p, int q) -> int {
    for (int b = 0; b < nb; ++b)
      if (grep.boxes[b].first == p && grep.boxes[b].second == q) return b;
    return -1;
  };
  int origin = nb > 0 ? index_of(0, 0) : -1;
  for (int b = 0; b < nb; ++b) {
    auto [p, q] = grep.boxes[b];
    if (int t = index_of(p + 1, q); t >= 0) succ[b] |= 1u << t;
    if (int t = index_of(p, q + 1); t >= 0) succ[b] |= 1u << t;
  }

  DestabilizerScan scan;
  const uint32_t full = nb == 32 ? ~0u : (1u << nb) - 1;
  for (int star = 0; star <= 1; ++star) {
    for (uint32_t mask = 0;; ++mask) {
      bool proper = !(star == 1 && mask == full);
      bool nonzero = star == 1 || mask != 0;
      bool closed = !(star == 1 && origin >= 0 && !(mask >> origin & 1));
      if (proper && nonzero && closed) {
        for (int b = 0; b < nb && closed; ++b)
          if (mask >> b & 1 && (succ[b] & ~mask)) closed = false;
        if (closed) {
          Rational value = chi[0] * (star ? 1 : 0);
          for (int b = 0; b < nb; ++b)
            if (mask >> b & 1) value += chi[grep.box_vertex[b] + 1];
          if (!scan.min_value || value < *scan.min_value) {
            scan.min_value = value;
            scan.witness_star = star == 1;
            scan.witness_boxes.clear();
            for (int b = 0; b < nb; ++b)
              if (mask >> b & 1) scan.witness_boxes.push_back(b);
          }
        }
      }
      if (mask == full) break;
    }
  }
  return scan;
}

}  // namespace quiverlab
