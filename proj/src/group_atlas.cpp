#include "quiverlab/group_atlas.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace quiverlab {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::binary_dihedral: return "binary_dihedral";
    case GroupKind::binary_tetrahedral: return "binary_tetrahedral";
    case GroupKind::binary_octahedral: return "binary_octahedral";
    case GroupKind::binary_icosahedral: return "binary_icosahedral";
  }
  return "?";
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string name = text;
  int param = 0;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    param = std::stoi(text.substr(colon + 1));
  }
  GroupSpec spec;
  if (name == "trivial") {
    spec.kind = GroupKind::trivial;
  } else if (name == "cyclic") {
    spec.kind = GroupKind::cyclic;
    spec.parameter = param;
    if (param < 1) throw std::invalid_argument("cyclic group needs parameter d >= 1");
  } else if (name == "binary_dihedral") {
    spec.kind = GroupKind::binary_dihedral;
    spec.parameter = param;
    if (param < 2)
      throw std::invalid_argument("binary_dihedral needs parameter m >= 2 (m=1 is cyclic:4)");
  } else if (name == "binary_tetrahedral") {
    spec.kind = GroupKind::binary_tetrahedral;
  } else if (name == "binary_octahedral") {
    spec.kind = GroupKind::binary_octahedral;
  } else if (name == "binary_icosahedral") {
    spec.kind = GroupKind::binary_icosahedral;
  } else {
    throw std::invalid_argument("unknown group kind: '" + text + "'");
  }
  return spec;
}

std::string GroupSpec::to_string() const {
  std::string s = kind_name(kind);
  if (kind == GroupKind::cyclic || kind == GroupKind::binary_dihedral)
    s += ":" + std::to_string(parameter);
  return s;
}

long FiniteGroupData::irrep_dim(int k) const {
  auto r = char_table[k][0].as_rational();
  if (!r || r->get_den() != 1)
    throw DataCorruptionError("irrep dimension chi_" + std::to_string(k) +
                              "(e) is not a rational integer");
  return r->get_num().get_si();
}

std::string default_data_dir() {
#ifdef QUIVERLAB_DATA_DIR
  return QUIVERLAB_DATA_DIR;
#else
  return "data";
#endif
}

CyclotomicNumber character_inner_product(const FiniteGroupData& g,
                                         std::span<const CyclotomicNumber> a,
                                         std::span<const CyclotomicNumber> b) {
  if (a.size() != static_cast<size_t>(g.class_count()) || a.size() != b.size())
    throw std::invalid_argument("character row length does not match class count");
  CyclotomicNumber acc(g.cyclotomic_order);
  for (int c = 0; c < g.class_count(); ++c) {
    CyclotomicNumber term = a[c] * b[c].conj();
    acc += term * CyclotomicNumber::from_rational(g.cyclotomic_order, Rational(g.classes[c].size));
  }
  return acc * CyclotomicNumber::from_rational(g.cyclotomic_order, Rational(1, g.order));
}

std::vector<CyclotomicNumber> pointwise_product(std::span<const CyclotomicNumber> a,
                                                std::span<const CyclotomicNumber> b) {
  if (a.size() != b.size()) throw std::invalid_argument("character row length mismatch");
  std::vector<CyclotomicNumber> out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

void validate_group_data(const FiniteGroupData& g) {
  const int d = g.irrep_count();
  const int nc = g.class_count();
  if (d == 0 || nc == 0) throw DataCorruptionError("empty character table");
  if (d != nc)
    throw DataCorruptionError("irrep count != class count (" + std::to_string(d) + " vs " +
                              std::to_string(nc) + ")");

  long size_sum = 0;
  for (const auto& c : g.classes) {
    if (c.size <= 0) throw DataCorruptionError("nonpositive conjugacy class size");
    size_sum += c.size;
  }
  if (size_sum != g.order)
    throw DataCorruptionError("class sizes sum to " + std::to_string(size_sum) +
                              ", expected group order " + std::to_string(g.order));
  if (g.classes[0].size != 1)
    throw DataCorruptionError("class 0 must be the identity class (size 1)");

  const CyclotomicNumber one = CyclotomicNumber::from_rational(g.cyclotomic_order, Rational(1));
  for (int c = 0; c < nc; ++c)
    if (g.char_table[0][c] != one)
      throw DataCorruptionError("row R_0 is not the trivial character");

  for (int i = 0; i < d; ++i)
    if (g.char_table[i].size() != static_cast<size_t>(nc))
      throw DataCorruptionError("character row " + std::to_string(i) + " has wrong length");

  // exact row orthogonality <chi_i, chi_j> = delta_ij
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      CyclotomicNumber ip = character_inner_product(g, g.char_table[i], g.char_table[j]);
      auto expected = CyclotomicNumber::from_rational(g.cyclotomic_order,
                                                      Rational(i == j ? 1 : 0));
      if (ip != expected)
        throw DataCorruptionError("row orthogonality <chi_" + std::to_string(i) + ", chi_" +
                                  std::to_string(j) + "> != " + (i == j ? "1" : "0"));
    }
  }

  // tautological character: real valued, chi_L(e) = 2
  if (g.taut_char.size() != static_cast<size_t>(nc))
    throw DataCorruptionError("tautological character has wrong length");
  for (int c = 0; c < nc; ++c)
    if (!g.taut_char[c].is_real())
      throw DataCorruptionError("tautological character is not real at class " +
                                std::to_string(c));
  if (g.taut_char[0] != CyclotomicNumber::from_rational(g.cyclotomic_order, Rational(2)))
    throw DataCorruptionError("tautological character has chi_L(e) != 2");

  // sum of squared dims = |Gamma|
  long dim_sq = 0;
  for (int k = 0; k < d; ++k) {
    long dk = g.irrep_dim(k);
    if (dk <= 0) throw DataCorruptionError("nonpositive irrep dimension");
    dim_sq += dk * dk;
  }
  if (dim_sq != g.order)
    throw DataCorruptionError("sum of squared irrep dimensions is " + std::to_string(dim_sq) +
                              ", expected group order " + std::to_string(g.order));
}

namespace {

FiniteGroupData make_trivial() {
  FiniteGroupData g;
  g.spec = {GroupKind::trivial, 0};
  g.order = 1;
  g.cyclotomic_order = 1;
  g.classes = {{1, "e"}};
  g.char_table = {{CyclotomicNumber::from_rational(1, Rational(1))}};
  g.taut_char = {CyclotomicNumber::from_rational(1, Rational(2))};
  return g;
}

FiniteGroupData make_cyclic(int d) {
  if (d == 1) {
    FiniteGroupData g = make_trivial();
    g.spec = {GroupKind::cyclic, 1};
    return g;
  }
  FiniteGroupData g;
  g.spec = {GroupKind::cyclic, d};
  g.order = d;
  g.cyclotomic_order = d;
  for (int j = 0; j < d; ++j) g.classes.push_back({1, "g^" + std::to_string(j)});
  g.char_table.resize(d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      g.char_table[k].push_back(CyclotomicNumber::root_power(d, static_cast<long>(k) * j));
  // L = R_1 + R_{d-1}: generator acts on C^2 as diag(w, w^-1)
  for (int j = 0; j < d; ++j)
    g.taut_char.push_back(CyclotomicNumber::root_power(d, j) +
                          CyclotomicNumber::root_power(d, -static_cast<long>(j)));
  return g;
}

// Binary dihedral BD_m = <a, x | a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1>,
// order 4m. Classes: e, -e = a^m, {a^k, a^-k} (k = 1..m-1), x-type, xa-type.
// Irreps: four 1-dimensional plus the 2-dimensional chi_j (j = 1..m-1);
// L = chi_1. Row order: triv, u, chi_1..chi_{m-1}, v, w (the D-tilde chain).
FiniteGroupData make_binary_dihedral(int m) {
  FiniteGroupData g;
  g.spec = {GroupKind::binary_dihedral, m};
  g.order = 4L * m;
  const int M = static_cast<int>(lcm_long(2L * m, 4L));  // exponent of the group
  g.cyclotomic_order = M;
  const long wa = M / (2 * m);  // w^wa is a primitive 2m-th root

  g.classes.push_back({1, "e"});
  g.classes.push_back({1, "-e"});
  for (int k = 1; k < m; ++k) g.classes.push_back({2, "a^" + std::to_string(k)});
  g.classes.push_back({m, "x"});
  g.classes.push_back({m, "xa"});
  const int nc = m + 3;

  auto rat = [&](long v) { return CyclotomicNumber::from_rational(M, Rational(v)); };
  auto one_dim = [&](int alpha, const CyclotomicNumber& beta) {
    // alpha = lambda(a) in {+1,-1}; beta = lambda(x)
    std::vector<CyclotomicNumber> row(nc, CyclotomicNumber(M));
    row[0] = rat(1);
    row[1] = rat(m % 2 == 0 ? 1 : alpha);  // lambda(a^m) = alpha^m
    for (int k = 1; k < m; ++k) row[1 + k] = rat(alpha > 0 ? 1 : (k % 2 == 0 ? 1 : -1));
    row[nc - 2] = beta;
    row[nc - 1] = beta * rat(alpha);
    return row;
  };
  auto two_dim = [&](int j) {
    std::vector<CyclotomicNumber> row(nc, CyclotomicNumber(M));
    row[0] = rat(2);
    row[1] = rat(j % 2 == 0 ? 2 : -2);
    for (int k = 1; k < m; ++k)
      row[1 + k] = CyclotomicNumber::root_power(M, wa * j * k) +
                   CyclotomicNumber::root_power(M, -wa * j * k);
    // zero on both x classes
    return row;
  };

  // beta for the alpha = -1 characters: +-1 when m even, +-i when m odd
  CyclotomicNumber beta_v = (m % 2 == 0) ? rat(1) : CyclotomicNumber::root_power(M, M / 4);
  g.char_table.push_back(one_dim(+1, rat(1)));   // trivial
  g.char_table.push_back(one_dim(+1, rat(-1)));  // u
  for (int j = 1; j < m; ++j) g.char_table.push_back(two_dim(j));
  g.char_table.push_back(one_dim(-1, beta_v));   // v
  g.char_table.push_back(one_dim(-1, -beta_v));  // w

  g.taut_char = two_dim(1);
  return g;
}

std::string data_file_name(GroupKind k) { return kind_name(k) + ".chartab"; }

CyclotomicNumber parse_entry(const std::string& token, int m) {
  CyclotomicNumber value(m);
  if (token == "0") return value;
  std::stringstream ss(token);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw DataCorruptionError("empty term in entry '" + token + "'");
    long exponent = 0;
    std::string coeff = term;
    auto at = term.find('@');
    if (at != std::string::npos) {
      coeff = term.substr(0, at);
      exponent = std::stol(term.substr(at + 1));
    }
    value.add_term(exponent, rational_from_string(coeff));
  }
  return value;
}

}  // namespace

FiniteGroupData parse_character_table(const std::string& text, const GroupSpec& expected) {
  FiniteGroupData g;
  g.spec = expected;
  std::istringstream in(text);
  std::string line;
  int declared_classes = -1, declared_irreps = -1;
  bool saw_taut = false;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "kind") {
      std::string k;
      ls >> k;
      if (k != kind_name(expected.kind))
        throw DataCorruptionError("data file kind '" + k + "' does not match requested group");
    } else if (key == "order") {
      ls >> g.order;
    } else if (key == "cyclotomic_order") {
      ls >> g.cyclotomic_order;
    } else if (key == "classes") {
      ls >> declared_classes;
    } else if (key == "irreps") {
      ls >> declared_irreps;
    } else if (key == "sizes") {
      long s;
      while (ls >> s) g.classes.push_back({s, ""});
    } else if (key == "labels") {
      std::string lab;
      while (ls >> lab) labels.push_back(lab);
    } else if (key == "row" || key == "taut") {
      std::vector<CyclotomicNumber> row;
      std::string tok;
      while (ls >> tok) row.push_back(parse_entry(tok, g.cyclotomic_order));
      if (key == "row") {
        g.char_table.push_back(std::move(row));
      } else {
        g.taut_char = std::move(row);
        saw_taut = true;
      }
    } else {
      throw DataCorruptionError("unknown key '" + key + "' in character table file");
    }
  }
  for (size_t i = 0; i < labels.size() && i < g.classes.size(); ++i)
    g.classes[i].label = labels[i];
  if (declared_classes != static_cast<int>(g.classes.size()))
    throw DataCorruptionError("declared class count does not match sizes line");
  if (declared_irreps != static_cast<int>(g.char_table.size()))
    throw DataCorruptionError("declared irrep count does not match row count");
  if (!saw_taut) throw DataCorruptionError("missing tautological character row");
  return g;
}

FiniteGroupData load_group(const GroupSpec& spec, const std::string& data_dir) {
  FiniteGroupData g;
  switch (spec.kind) {
    case GroupKind::trivial:
      g = make_trivial();
      break;
    case GroupKind::cyclic:
      if (spec.parameter < 1) throw std::invalid_argument("cyclic group needs d >= 1");
      g = make_cyclic(spec.parameter);
      break;
    case GroupKind::binary_dihedral:
      if (spec.parameter < 2) throw std::invalid_argument("binary_dihedral needs m >= 2");
      g = make_binary_dihedral(spec.parameter);
      break;
    default: {
      std::string path = data_dir + "/" + data_file_name(spec.kind);
      std::ifstream f(path);
      if (!f) throw std::runtime_error("cannot open bundled character table: " + path);
      std::stringstream buf;
      buf << f.rdbuf();
      g = parse_character_table(buf.str(), spec);
      break;
    }
  }
  validate_group_data(g);
  return g;
}

std::vector<std::vector<long>> tensor_multiplicities(const FiniteGroupData& g) {
  const int d = g.irrep_count();
  std::vector<std::vector<long>> a(d, std::vector<long>(d, 0));
  for (int k = 0; k < d; ++k) {
    auto row = pointwise_product(g.char_table[k], g.taut_char);
    for (int l = 0; l < d; ++l) {
      CyclotomicNumber ip = character_inner_product(g, row, g.char_table[l]);
      auto r = ip.as_rational();
      if (!r || r->get_den() != 1 || *r < 0)
        throw DataCorruptionError("tensor multiplicity a_{" + std::to_string(k) + "," +
                                  std::to_string(l) +
                                  "} is not a nonnegative integer: " + ip.to_string());
      a[k][l] = r->get_num().get_si();
    }
  }
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      if (a[k][l] != a[l][k])
        throw DataCorruptionError("tensor multiplicity matrix is not symmetric");
  return a;
}

McKayGraph mckay_graph(const FiniteGroupData& g) {
  McKayGraph graph;
  graph.d = g.irrep_count();
  graph.adjacency = tensor_multiplicities(g);
  for (int k = 0; k < graph.d; ++k) graph.v0.push_back(g.irrep_dim(k));

  long n_check = 0;
  for (long v : graph.v0) n_check += v * v;
  if (n_check != g.order)
    throw DataCorruptionError("sum (v0_k)^2 != |Gamma|");
  for (int l = 0; l < graph.d; ++l) {
    long s = 0;
    for (int k = 0; k < graph.d; ++k) s += graph.adjacency[k][l] * graph.v0[k];
    if (s != 2 * graph.v0[l])
      throw DataCorruptionError("A v0 != 2 v0 at vertex " + std::to_string(l));
  }
  if (g.order > 1) {
    for (int k = 0; k < graph.d; ++k)
      if (graph.adjacency[k][k] != 0)
        throw DataCorruptionError("nontrivial group with loop in McKay graph");
  }
  return graph;
}

}  // namespace quiverlab
