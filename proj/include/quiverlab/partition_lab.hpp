#pragma once

#include <string>
#include <vector>

#include "quiverlab/rational.hpp"

namespace quiverlab {

// Young diagram as a weakly decreasing list of positive parts. Boxes live in
// the top right-hand octant; box (p,q) has column p >= 0 within row q >= 0,
// so row q contributes boxes (0,q) .. (parts[q]-1, q).
struct YoungDiagram {
  std::vector<int> parts;

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> p);

  static YoungDiagram parse(const std::string& comma_joined);  // "" -> empty
  std::string to_string() const;

  long size() const;
  bool empty() const { return parts.empty(); }
  int rows() const { return static_cast<int>(parts.size()); }
  bool contains(int p, int q) const {
    return q >= 0 && q < rows() && p >= 0 && p < parts[q];
  }
  std::vector<std::pair<int, int>> boxes() const;  // (p,q), row-major

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) { return a.parts < b.parts; }
};

struct ColourProfile {
  int d = 1;
  std::vector<long> counts;  // counts[i] = #{(p,q) : p-q = i mod d}
};

struct Multipartition {
  std::vector<YoungDiagram> components;

  long total_size() const;
  std::string to_string() const;  // semicolon-joined partitions
  static Multipartition parse(const std::string& text, int d);
  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend bool operator<(const Multipartition& a, const Multipartition& b) {
    return a.components < b.components;
  }
};

// Beta-number encoding of a partition: strictly decreasing nonnegative
// integers beta_i = parts[i] + (count - 1 - i), parts padded with zeros.
// The carrier for the d-runner abacus.
struct AbacusState {
  int d = 1;
  std::vector<long> beta;  // strictly decreasing

  static AbacusState from_diagram(const YoungDiagram& delta, int d, int bead_count);
  YoungDiagram to_diagram() const;
};

ColourProfile colour_counts(const YoungDiagram& delta, int d);
bool is_uniform(const YoungDiagram& delta, int d);

// All partitions of n, descending-lexicographic order.
std::vector<YoungDiagram> enumerate_partitions(int n);

// Uniformly coloured diagrams with n boxes of each of d colours, i.e. the
// uniform partitions of n*d. Deterministic (descending-lex) order.
std::vector<YoungDiagram> enumerate_ucy(int n, int d);

// Ordered d-tuples of diagrams with total size n.
std::vector<Multipartition> enumerate_cy(int n, int d);

struct IdentityReport {
  long ucy = 0;
  long cy = 0;
  bool equal = false;
};

// Both counts by enumeration; inequality is reported, never suppressed.
IdentityReport verify_identity(int n, int d);

struct CoreQuotient {
  YoungDiagram core;
  Multipartition quotient;
};

// d-core and d-quotient via the abacus. The beta-set is padded to a multiple
// of d beads (which makes the runner decomposition independent of the
// padding); runner j collects the beta numbers congruent to j mod d, and
// quotient component j is read off runner j. |delta| = |core| + d * |quotient|.
CoreQuotient core_and_quotient(const YoungDiagram& delta, int d);

// True iff the d-quotient of delta is empty.
bool is_d_core(const YoungDiagram& delta, int d);

// Inverse of core_and_quotient. Throws std::invalid_argument when core is
// not a d-core.
YoungDiagram from_core_and_quotient(const YoungDiagram& core, const Multipartition& quotient,
                                    int d);

}  // namespace quiverlab
