#include "szmap/simplex_categories.hpp"

#include <algorithm>

namespace szmap {

namespace {

std::string power_token(const char* head, int exponent) {
  std::string out = head;
  if (exponent > 1) {
    out += '^';
    out += std::to_string(exponent);
  }
  return out;
}

// "d_1^{n-k-a} d_0^a g_k" with zero exponents dropped.
std::string g_vertex_label(int n, int k, int a) {
  std::string out;
  const int e1 = n - k - a;
  if (e1 > 0) out += power_token("d_1", e1);
  if (a > 0) {
    if (!out.empty()) out += ' ';
    out += power_token("d_0", a);
  }
  if (!out.empty()) out += ' ';
  out += "g_" + std::to_string(k);
  return out;
}

void check_same_hom(int xn, int xp, int xq, int yn, int yp, int yq) {
  if (xn != yn || xp != yp || xq != yq)
    throw std::invalid_argument("poset comparison requires elements of the same hom");
}

template <typename E>
std::string chain_string(const ChainSimplex<E>& c, bool descending) {
  std::string out;
  const auto& es = c.entries;
  for (size_t i = 0; i < es.size(); ++i) {
    const E& e = descending ? es[es.size() - 1 - i] : es[i];
    if (i > 0) out += descending ? " >= " : " <= ";
    out += to_string(e);
  }
  return out;
}

template <typename E>
void extend_chains(const std::vector<E>& elements, int len, bool nondegenerate_only,
                   std::vector<E>& cur, std::vector<ChainSimplex<E>>& out) {
  if (static_cast<int>(cur.size()) == len + 1) {
    out.push_back(ChainSimplex<E>{cur});
    return;
  }
  for (const E& e : elements) {
    if (!cur.empty()) {
      if (!poset_leq(cur.back(), e)) continue;
      if (nondegenerate_only && cur.back() == e) continue;
    }
    cur.push_back(e);
    extend_chains(elements, len, nondegenerate_only, cur, out);
    cur.pop_back();
  }
}

template <typename E>
std::vector<ChainSimplex<E>> chains_over(const std::vector<E>& elements, int len,
                                         bool nondegenerate_only) {
  std::vector<ChainSimplex<E>> out;
  if (len < 0) return out;
  std::vector<E> cur;
  extend_chains(elements, len, nondegenerate_only, cur, out);
  return out;
}

}  // namespace

GPosetPosition::GPosetPosition(int n_, int k_, int a_) : n(n_), k(k_), a(a_) {
  if (k < 1 || k > n) throw std::invalid_argument("generator index k must satisfy 1 <= k <= n");
  if (a < 0 || a > n - k) throw std::invalid_argument("position must satisfy 0 <= a <= n-k");
}

bool poset_leq(const GPosetPosition& x, const GPosetPosition& y) {
  if (x.n != y.n || x.k != y.k)
    throw std::invalid_argument("poset comparison requires positions of the same generator");
  return x.a <= y.a;
}

std::string to_string(const GPosetPosition& x) { return g_vertex_label(x.n, x.k, x.a); }

GHomElement::GHomElement(int n_, int p_, int q_, std::vector<int> positions_)
    : n(n_), p(p_), q(q_), positions(std::move(positions_)) {
  if (n < 0 || p < 0 || p > q || q > n)
    throw std::invalid_argument("hom requires 0 <= p <= q <= n");
  if (static_cast<int>(positions.size()) != q - p)
    throw std::invalid_argument("hom element needs one position per k in (p, q]");
  for (int j = 0; j < static_cast<int>(positions.size()); ++j) {
    const int k = q - j;
    if (positions[static_cast<size_t>(j)] < 0 || positions[static_cast<size_t>(j)] > n - k)
      throw std::invalid_argument("component position out of range");
  }
}

GHomElement GHomElement::identity(int n, int q) { return GHomElement(n, q, q, {}); }

int GHomElement::position(int k) const {
  if (k <= p || k > q) throw std::invalid_argument("component index k must satisfy p < k <= q");
  return positions[static_cast<size_t>(q - k)];
}

GPosetPosition GHomElement::component(int k) const {
  return GPosetPosition(n, k, position(k));
}

bool poset_leq(const GHomElement& x, const GHomElement& y) {
  check_same_hom(x.n, x.p, x.q, y.n, y.p, y.q);
  for (size_t j = 0; j < x.positions.size(); ++j)
    if (x.positions[j] > y.positions[j]) return false;
  return true;
}

std::string to_string(const GHomElement& x) {
  if (x.p == x.q) return "id_" + std::to_string(x.q);
  std::string out = "(";
  for (int j = 0; j < static_cast<int>(x.positions.size()); ++j) {
    if (j > 0) out += ", ";
    out += g_vertex_label(x.n, x.q - j, x.positions[static_cast<size_t>(j)]);
  }
  out += ')';
  return out;
}

SubsetMorphism::SubsetMorphism(int n_, std::vector<int> members_)
    : n(n_), members(std::move(members_)) {
  if (members.empty()) throw std::invalid_argument("subset must be nonempty");
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] > n)
      throw std::invalid_argument("subset member out of range [0, n]");
    if (i > 0 && members[i] <= members[i - 1])
      throw std::invalid_argument("subset members must be strictly increasing");
  }
  p = members.front();
  q = members.back();
}

bool SubsetMorphism::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool poset_leq(const SubsetMorphism& x, const SubsetMorphism& y) {
  check_same_hom(x.n, x.p, x.q, y.n, y.p, y.q);
  // x <= y iff y is a subset of x
  return std::includes(x.members.begin(), x.members.end(), y.members.begin(), y.members.end());
}

std::string to_string(const SubsetMorphism& x) {
  std::string out = "{";
  for (size_t i = 0; i < x.members.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x.members[i]);
  }
  out += '}';
  return out;
}

std::string to_string(const ChainSimplex<SubsetMorphism>& c, bool descending) {
  return chain_string(c, descending);
}
std::string to_string(const ChainSimplex<GHomElement>& c, bool descending) {
  return chain_string(c, descending);
}
std::string to_string(const ChainSimplex<GPosetPosition>& c, bool descending) {
  return chain_string(c, descending);
}

SequenceIndex::SequenceIndex(int p_, int q_, std::vector<int> entries_)
    : p(p_), q(q_), entries(std::move(entries_)) {
  if (p < 0 || p >= q) throw std::invalid_argument("sequence requires 0 <= p < q");
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] <= p || entries[i] >= q)
      throw std::invalid_argument("sequence entries must lie strictly between p and q");
    for (size_t j = 0; j < i; ++j)
      if (entries[j] == entries[i])
        throw std::invalid_argument("sequence entries must be pairwise distinct");
  }
}

std::string to_string(const SequenceIndex& i) {
  std::string out = "(";
  for (size_t j = 0; j < i.entries.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(i.entries[j]);
  }
  out += ')';
  return out;
}

SubsetMorphism compose_c(const SubsetMorphism& U, const SubsetMorphism& V) {
  if (U.n != V.n) throw std::invalid_argument("compose_c: ambient dimensions differ");
  if (U.q != V.p) throw std::invalid_argument("compose_c: morphisms are not composable");
  std::vector<int> merged;
  merged.reserve(U.members.size() + V.members.size());
  std::set_union(U.members.begin(), U.members.end(), V.members.begin(), V.members.end(),
                 std::back_inserter(merged));
  return SubsetMorphism(U.n, std::move(merged));
}

GHomElement compose_g(const GHomElement& f, const GHomElement& g) {
  if (f.n != g.n) throw std::invalid_argument("compose_g: ambient dimensions differ");
  if (f.q != g.p) throw std::invalid_argument("compose_g: morphisms are not composable");
  std::vector<int> positions = g.positions;
  positions.insert(positions.end(), f.positions.begin(), f.positions.end());
  return GHomElement(f.n, f.p, g.q, std::move(positions));
}

ChainSimplex<SubsetMorphism> seq_to_chain(const SequenceIndex& i, int n) {
  std::vector<SubsetMorphism> entries;
  const int l = i.length();
  entries.reserve(static_cast<size_t>(l) + 1);
  for (int j = 0; j <= l; ++j) {
    std::vector<int> members(i.entries.begin(), i.entries.begin() + (l - j));
    members.push_back(i.p);
    members.push_back(i.q);
    std::sort(members.begin(), members.end());
    entries.emplace_back(n, std::move(members));
  }
  return make_chain(std::move(entries));
}

namespace {

void extend_sequences(int p, int q, int len, std::vector<int>& cur,
                      std::vector<SequenceIndex>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.emplace_back(p, q, cur);
    return;
  }
  for (int v = p + 1; v <= q - 1; ++v) {
    if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
    cur.push_back(v);
    extend_sequences(p, q, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SequenceIndex> enumerate_sequences(int p, int q, int len) {
  std::vector<SequenceIndex> out;
  if (p < 0 || p >= q) return out;
  if (len < 0 || len > q - p - 1) return out;
  std::vector<int> cur;
  extend_sequences(p, q, len, cur, out);
  return out;
}

std::vector<SubsetMorphism> enumerate_c_hom(int n, int p, int q) {
  if (n < 0 || p < 0 || p > q || q > n)
    throw std::invalid_argument("hom requires 0 <= p <= q <= n");
  const int d = std::max(q - p - 1, 0);
  std::vector<std::vector<int>> member_lists;
  member_lists.reserve(static_cast<size_t>(1) << d);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> members;
    members.push_back(p);
    for (int b = 0; b < d; ++b)
      if (mask & (1u << b)) members.push_back(p + 1 + b);
    if (q != p) members.push_back(q);
    member_lists.push_back(std::move(members));
  }
  std::sort(member_lists.begin(), member_lists.end());
  std::vector<SubsetMorphism> out;
  out.reserve(member_lists.size());
  for (auto& m : member_lists) out.emplace_back(n, std::move(m));
  return out;
}

std::vector<GHomElement> enumerate_g_hom(int n, int p, int q) {
  if (n < 0 || p < 0 || p > q || q > n)
    throw std::invalid_argument("hom requires 0 <= p <= q <= n");
  std::vector<GHomElement> out;
  std::vector<int> cur;
  // odometer over positions, k = q down to p+1, lexicographic
  auto rec = [&](auto&& self, int k) -> void {
    if (k == p) {
      out.emplace_back(n, p, q, cur);
      return;
    }
    for (int a = 0; a <= n - k; ++a) {
      cur.push_back(a);
      self(self, k - 1);
      cur.pop_back();
    }
  };
  rec(rec, q);
  return out;
}

std::vector<ChainSimplex<SubsetMorphism>> enumerate_nerve_c(int n, int p, int q, int len,
                                                            bool nondegenerate_only) {
  return chains_over(enumerate_c_hom(n, p, q), len, nondegenerate_only);
}

std::vector<ChainSimplex<GHomElement>> enumerate_nerve_g(int n, int p, int q, int len,
                                                         bool nondegenerate_only) {
  return chains_over(enumerate_g_hom(n, p, q), len, nondegenerate_only);
}

}  // namespace szmap
