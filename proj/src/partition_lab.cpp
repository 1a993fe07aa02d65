#include "quiverlab/partition_lab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quiverlab {

YoungDiagram::YoungDiagram(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return YoungDiagram(std::move(parts));
}

std::string YoungDiagram::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

long YoungDiagram::size() const {
  long s = 0;
  for (int p : parts) s += p;
  return s;
}

std::vector<std::pair<int, int>> YoungDiagram::boxes() const {
  std::vector<std::pair<int, int>> out;
  for (int q = 0; q < rows(); ++q)
    for (int p = 0; p < parts[q]; ++p) out.emplace_back(p, q);
  return out;
}

long Multipartition::total_size() const {
  long s = 0;
  for (const auto& c : components) s += c.size();
  return s;
}

std::string Multipartition::to_string() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += ";";
    s += components[i].to_string();
  }
  return s;
}

Multipartition Multipartition::parse(const std::string& text, int d) {
  Multipartition mp;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      mp.components.push_back(YoungDiagram::parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  mp.components.push_back(YoungDiagram::parse(cur));
  if (static_cast<int>(mp.components.size()) != d)
    throw std::invalid_argument("multipartition has wrong number of components");
  return mp;
}

ColourProfile colour_counts(const YoungDiagram& delta, int d) {
  if (d < 1) throw std::invalid_argument("colour count needs d >= 1");
  ColourProfile cp;
  cp.d = d;
  cp.counts.assign(d, 0);
  for (int q = 0; q < delta.rows(); ++q)
    for (int p = 0; p < delta.parts[q]; ++p) cp.counts[((p - q) % d + d) % d] += 1;
  return cp;
}

bool is_uniform(const YoungDiagram& delta, int d) {
  ColourProfile cp = colour_counts(delta, d);
  for (long c : cp.counts)
    if (c != cp.counts[0]) return false;
  return true;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& stack,
                    std::vector<YoungDiagram>& out) {
  if (n == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    stack.push_back(p);
    gen_partitions(n - p, p, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("partition size must be >= 0");
  std::vector<YoungDiagram> out;
  std::vector<int> stack;
  gen_partitions(n, n, stack, out);
  return out;
}

std::vector<YoungDiagram> enumerate_ucy(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("enumerate_ucy needs n >= 0, d >= 1");
  std::vector<YoungDiagram> out;
  for (auto& delta : enumerate_partitions(n * d))
    if (is_uniform(delta, d)) out.push_back(std::move(delta));
  return out;
}

namespace {

void gen_cy(int remaining, int k, int d, Multipartition& cur,
            std::vector<Multipartition>& out) {
  if (k == d - 1) {
    auto tail = enumerate_partitions(remaining);
    for (auto& t : tail) {
      cur.components[k] = std::move(t);
      out.push_back(cur);
    }
    cur.components[k] = YoungDiagram();
    return;
  }
  for (int s = 0; s <= remaining; ++s) {
    for (const auto& p : enumerate_partitions(s)) {
      cur.components[k] = p;
      gen_cy(remaining - s, k + 1, d, cur, out);
    }
  }
  cur.components[k] = YoungDiagram();
}

}  // namespace

std::vector<Multipartition> enumerate_cy(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("enumerate_cy needs n >= 0, d >= 1");
  std::vector<Multipartition> out;
  Multipartition cur;
  cur.components.assign(d, YoungDiagram());
  gen_cy(n, 0, d, cur, out);
  return out;
}

IdentityReport verify_identity(int n, int d) {
  IdentityReport rep;
  rep.ucy = static_cast<long>(enumerate_ucy(n, d).size());
  rep.cy = static_cast<long>(enumerate_cy(n, d).size());
  rep.equal = rep.ucy == rep.cy;
  return rep;
}

AbacusState AbacusState::from_diagram(const YoungDiagram& delta, int d, int bead_count) {
  if (bead_count < delta.rows())
    throw std::invalid_argument("bead count smaller than number of parts");
  AbacusState st;
  st.d = d;
  for (int i = 0; i < bead_count; ++i) {
    long part = i < delta.rows() ? delta.parts[i] : 0;
    st.beta.push_back(part + (bead_count - 1 - i));
  }
  return st;
}

YoungDiagram AbacusState::to_diagram() const {
  const int r = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) {
    long p = beta[i] - (r - 1 - i);
    if (p < 0) throw std::invalid_argument("beta numbers are not strictly decreasing");
    if (p > 0) parts.push_back(static_cast<int>(p));
  }
  return YoungDiagram(std::move(parts));
}

namespace {

int padded_bead_count(const YoungDiagram& delta, int d) {
  int r = delta.rows();
  int rem = r % d;
  return rem == 0 ? r : r + (d - rem);
}

}  // namespace

CoreQuotient core_and_quotient(const YoungDiagram& delta, int d) {
  if (d < 1) throw std::invalid_argument("core/quotient needs d >= 1");
  const int r = padded_bead_count(delta, d);
  AbacusState st = AbacusState::from_diagram(delta, d, r);

  // runner j: bead positions (b - j)/d for beta numbers b = j (mod d)
  std::vector<std::vector<long>> runner(d);
  for (long b : st.beta) runner[b % d].push_back((b - (b % d)) / d);
  for (auto& pos : runner) std::sort(pos.begin(), pos.end(), std::greater<long>());

  CoreQuotient cq;
  cq.quotient.components.resize(d);
  for (int j = 0; j < d; ++j) {
    AbacusState rj;
    rj.d = 1;
    rj.beta = runner[j];
    cq.quotient.components[j] = rj.to_diagram();
  }

  // core: slide every bead down to the bottom of its runner
  std::vector<long> core_beta;
  for (int j = 0; j < d; ++j)
    for (long p = 0; p < static_cast<long>(runner[j].size()); ++p)
      core_beta.push_back(p * d + j);
  std::sort(core_beta.begin(), core_beta.end(), std::greater<long>());
  AbacusState core_state;
  core_state.d = d;
  core_state.beta = std::move(core_beta);
  cq.core = core_state.to_diagram();

  if (cq.core.size() + static_cast<long>(d) * cq.quotient.total_size() != delta.size())
    throw std::logic_error("core/quotient size bookkeeping failed");
  return cq;
}

bool is_d_core(const YoungDiagram& delta, int d) {
  return core_and_quotient(delta, d).quotient.total_size() == 0;
}

YoungDiagram from_core_and_quotient(const YoungDiagram& core, const Multipartition& quotient,
                                    int d) {
  if (d < 1) throw std::invalid_argument("core/quotient needs d >= 1");
  if (static_cast<int>(quotient.components.size()) != d)
    throw std::invalid_argument("quotient must have exactly d components");
  if (!is_d_core(core, d))
    throw std::invalid_argument("core argument is not a d-core: " + core.to_string());

  int max_quot_rows = 0;
  for (const auto& c : quotient.components)
    max_quot_rows = std::max(max_quot_rows, c.rows());

  // grow the bead count until every runner can absorb its quotient component
  for (int mult = 1;; ++mult) {
    int r = padded_bead_count(core, d) + d * (max_quot_rows + mult);
    AbacusState st = AbacusState::from_diagram(core, d, r);
    std::vector<std::vector<long>> runner(d);
    for (long b : st.beta) runner[b % d].push_back((b - (b % d)) / d);

    bool ok = true;
    for (int j = 0; j < d && ok; ++j)
      if (static_cast<long>(runner[j].size()) < quotient.components[j].rows()) ok = false;
    if (!ok) continue;

    std::vector<long> beta;
    for (int j = 0; j < d; ++j) {
      const long k = static_cast<long>(runner[j].size());
      // core runners are fully pushed down, so positions are 0..k-1;
      // shifting by the quotient parts rebuilds the runner
      const auto& parts = quotient.components[j].parts;
      for (long i = 0; i < k; ++i) {
        long part = i < static_cast<long>(parts.size()) ? parts[i] : 0;
        long pos = part + (k - 1 - i);
        beta.push_back(pos * d + j);
      }
    }
    std::sort(beta.begin(), beta.end(), std::greater<long>());
    AbacusState full;
    full.d = d;
    full.beta = std::move(beta);
    return full.to_diagram();
  }
}

}  // namespace quiverlab
