#pragma once

#include <span>
#include <string>
#include <vector>

#include "quiverlab/cyclotomic.hpp"

namespace quiverlab {

enum class GroupKind {
  trivial,
  cyclic,
  binary_dihedral,
  binary_tetrahedral,
  binary_octahedral,
  binary_icosahedral,
};

// Group selector: kind plus the integer parameter where one applies
// (cyclic d >= 1, binary_dihedral m >= 2).
struct GroupSpec {
  GroupKind kind = GroupKind::trivial;
  int parameter = 0;

  // Parses "trivial", "cyclic:5", "binary_dihedral:3", "binary_icosahedral", ...
  static GroupSpec parse(const std::string& text);
  std::string to_string() const;
};

struct ConjClass {
  long size = 0;
  std::string label;
};

// Raised when a bundled or generated character table fails load-time
// validation; the message names the violated identity.
struct DataCorruptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact conjugacy-class and character data of a finite subgroup of SL(2,C).
// Row 0 of the table is always the trivial representation. Character values
// live in Q(w) for w a primitive root of unity of order = exponent of the
// group. taut_char is the character of the 2-dimensional tautological
// representation coming from the SL(2,C) embedding; it need not be a row of
// the table (for cyclic groups it splits as R_1 + R_{d-1}).
struct FiniteGroupData {
  GroupSpec spec;
  long order = 1;
  int cyclotomic_order = 1;
  std::vector<ConjClass> classes;
  std::vector<std::vector<CyclotomicNumber>> char_table;  // rows = irreps
  std::vector<CyclotomicNumber> taut_char;

  int irrep_count() const { return static_cast<int>(char_table.size()); }
  int class_count() const { return static_cast<int>(classes.size()); }
  // dim R_k = chi_k(identity); identity is always class 0
  long irrep_dim(int k) const;
};

// Affine Dynkin graph of the McKay correspondence: adjacency a_{k,l} and the
// dimension vector v0 of irrep dimensions (the minimal positive imaginary
// root; A v0 = 2 v0).
struct McKayGraph {
  int d = 0;
  std::vector<std::vector<long>> adjacency;
  std::vector<long> v0;
};

std::string default_data_dir();

// Loads exact class/character data. Trivial, cyclic and binary dihedral
// tables are generated procedurally; the three exceptional binary groups are
// read from bundled data files under data_dir. Every table, bundled or
// generated, passes full validation (class-size sum, trivial row, exact row
// orthogonality, tautological character checks, sum of squared dims) before
// being returned.
FiniteGroupData load_group(const GroupSpec& spec, const std::string& data_dir = default_data_dir());

// (1/N) sum_c |c| a(c) conj(b(c)), exact.
CyclotomicNumber character_inner_product(const FiniteGroupData& g,
                                         std::span<const CyclotomicNumber> a,
                                         std::span<const CyclotomicNumber> b);

std::vector<CyclotomicNumber> pointwise_product(std::span<const CyclotomicNumber> a,
                                                std::span<const CyclotomicNumber> b);

// a_{k,l} = <chi_k . chi_L, chi_l>: multiplicity of R_l in R_k (x) L.
// Entries are checked to be nonnegative integers and the matrix symmetric.
std::vector<std::vector<long>> tensor_multiplicities(const FiniteGroupData& g);

McKayGraph mckay_graph(const FiniteGroupData& g);

// Parses a character table from text (the bundled file format); exposed for
// tests that exercise the validation error paths.
FiniteGroupData parse_character_table(const std::string& text, const GroupSpec& expected);
void validate_group_data(const FiniteGroupData& g);

}  // namespace quiverlab
