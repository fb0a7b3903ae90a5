#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "szmap/simplicial_ops.hpp"

namespace szmap {

// Vertex a of the linear order on the iterated faces of the generator g_k
// inside the ambient n-simplex: position a stands for d_1^{n-k-a} d_0^a g_k,
// with 0 <= a <= n-k.
struct GPosetPosition {
  int n = 0;
  int k = 0;
  int a = 0;

  GPosetPosition() = default;
  GPosetPosition(int n_, int k_, int a_);

  bool operator==(const GPosetPosition&) const = default;
};

bool poset_leq(const GPosetPosition& x, const GPosetPosition& y);
std::string to_string(const GPosetPosition& x);

// A morphism p -> q of the loop-group side: one position per component k,
// listed from k = q down to k = p+1. The order is componentwise and
// composition concatenates tuples. p = q is the empty tuple (the identity).
struct GHomElement {
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<int> positions;  // positions[j] is the k = q - j component

  GHomElement() = default;
  GHomElement(int n_, int p_, int q_, std::vector<int> positions_);

  static GHomElement identity(int n, int q);

  int position(int k) const;  // p < k <= q
  GPosetPosition component(int k) const;

  bool operator==(const GHomElement&) const = default;
};

bool poset_leq(const GHomElement& x, const GHomElement& y);
std::string to_string(const GHomElement& x);  // "(g_2, d_1 g_1)", "id_3"

// A morphism p -> q of the rigidification side: a subset of {p, ..., q}
// containing both endpoints, ordered by reverse inclusion (U <= V iff
// V is a subset of U). Composition takes unions.
struct SubsetMorphism {
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<int> members;  // strictly increasing; front() == p, back() == q

  SubsetMorphism() = default;
  SubsetMorphism(int n_, std::vector<int> members_);

  bool contains(int v) const;

  bool operator==(const SubsetMorphism&) const = default;
};

bool poset_leq(const SubsetMorphism& x, const SubsetMorphism& y);
std::string to_string(const SubsetMorphism& x);  // "{0,2,3}"

// An l-simplex of the nerve of a poset: l+1 entries, weakly increasing in
// the poset order. Entry 0 is the bottom of the chain.
template <typename E>
struct ChainSimplex {
  std::vector<E> entries;

  int length() const { return static_cast<int>(entries.size()) - 1; }

  bool nondegenerate() const {
    for (size_t i = 1; i < entries.size(); ++i)
      if (entries[i] == entries[i - 1]) return false;
    return true;
  }

  bool operator==(const ChainSimplex&) const = default;
};

template <typename E>
ChainSimplex<E> make_chain(std::vector<E> entries) {
  if (entries.empty()) throw std::invalid_argument("chain must have at least one entry");
  for (size_t i = 1; i < entries.size(); ++i)
    if (!poset_leq(entries[i - 1], entries[i]))
      throw std::invalid_argument("chain entries must be weakly increasing in the poset order");
  return ChainSimplex<E>{std::move(entries)};
}

template <typename E>
ChainSimplex<E> chain_face(int j, const ChainSimplex<E>& c) {
  if (j < 0 || j > c.length()) throw std::invalid_argument("chain face index out of range");
  if (c.length() == 0) throw std::invalid_argument("a 0-chain has no faces");
  std::vector<E> entries = c.entries;
  entries.erase(entries.begin() + j);
  return ChainSimplex<E>{std::move(entries)};
}

template <typename E>
ChainSimplex<E> chain_degeneracy(int j, const ChainSimplex<E>& c) {
  if (j < 0 || j > c.length())
    throw std::invalid_argument("chain degeneracy index out of range");
  std::vector<E> entries = c.entries;
  entries.insert(entries.begin() + j, entries[static_cast<size_t>(j)]);
  return ChainSimplex<E>{std::move(entries)};
}

// Chain display; descending prints the chain top-down as "x >= y >= z".
std::string to_string(const ChainSimplex<SubsetMorphism>& c, bool descending = false);
std::string to_string(const ChainSimplex<GHomElement>& c, bool descending = false);
std::string to_string(const ChainSimplex<GPosetPosition>& c, bool descending = false);

// A sequence (i_1, ..., i_l) of pairwise distinct integers strictly between
// p and q; l = 0 encodes the empty sequence.
struct SequenceIndex {
  int p = 0;
  int q = 0;
  std::vector<int> entries;

  SequenceIndex() = default;
  SequenceIndex(int p_, int q_, std::vector<int> entries_);

  int length() const { return static_cast<int>(entries.size()); }

  bool operator==(const SequenceIndex&) const = default;
};

std::string to_string(const SequenceIndex& i);  // "(2,1)", "()"

// Union composition of U: p -> r with V: r -> q.
SubsetMorphism compose_c(const SubsetMorphism& U, const SubsetMorphism& V);

// Concatenation composition of f: p -> r with g: r -> q.
GHomElement compose_g(const GHomElement& f, const GHomElement& g);

// The chain ({p, i_1, ..., i_l, q} <= {p, i_1, ..., i_{l-1}, q} <= ... <= {p, q}).
ChainSimplex<SubsetMorphism> seq_to_chain(const SequenceIndex& i, int n);

// All injective length-len sequences over {p+1, ..., q-1}, lexicographic.
// Out-of-range len yields the empty list.
std::vector<SequenceIndex> enumerate_sequences(int p, int q, int len);

// Elements of the two hom posets, in a fixed lexicographic order.
std::vector<SubsetMorphism> enumerate_c_hom(int n, int p, int q);
std::vector<GHomElement> enumerate_g_hom(int n, int p, int q);

// Weakly (or strictly) increasing chains of length len, lexicographic in
// the element order of the enumerations above.
std::vector<ChainSimplex<SubsetMorphism>> enumerate_nerve_c(int n, int p, int q, int len,
                                                            bool nondegenerate_only);
std::vector<ChainSimplex<GHomElement>> enumerate_nerve_g(int n, int p, int q, int len,
                                                         bool nondegenerate_only);

}  // namespace szmap
