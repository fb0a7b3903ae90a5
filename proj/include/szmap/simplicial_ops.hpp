#pragma once

#include <string>
#include <vector>

namespace szmap {

// A simplex of a standard simplex, stored as its weakly increasing vertex
// list. A list of length l+1 is an l-simplex; it is nondegenerate iff the
// list is strictly increasing.
struct VertexList {
  std::vector<int> vertices;

  VertexList() = default;
  explicit VertexList(std::vector<int> vs);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  bool nondegenerate() const;

  bool operator==(const VertexList&) const = default;
};

// The generic simplex [0, 1, ..., dim].
VertexList generic_simplex(int dim);

struct OpGenerator {
  enum class Kind { face, degeneracy };
  Kind kind;
  int index;

  bool operator==(const OpGenerator&) const = default;
};

inline OpGenerator face_gen(int i) { return {OpGenerator::Kind::face, i}; }
inline OpGenerator degeneracy_gen(int i) { return {OpGenerator::Kind::degeneracy, i}; }

// A word of generators in composition order: the rightmost generator acts
// first, like the written composite s_0 d_1 = s_0 after d_1.
using OpWord = std::vector<OpGenerator>;

// A simplicial operator in canonical form: a degeneracy block
// s_{j_1} ... s_{j_t} with j_1 > ... > j_t applied after a face block
// d_{i_1} ... d_{i_u} with i_1 < ... < i_u. The factorization is unique:
// two operators have equal fields iff they act identically on every
// simplex of dimension domain_dim.
class NormalOperator {
 public:
  NormalOperator(std::vector<int> degeneracies, std::vector<int> faces, int domain_dim);

  static NormalOperator identity(int domain_dim);

  // The operator whose action on the generic simplex [0..domain_dim]
  // yields `image`. Requires image weakly increasing in [0, domain_dim].
  static NormalOperator from_vertex_map(const std::vector<int>& image, int domain_dim);

  const std::vector<int>& degeneracy_indices() const { return degeneracy_indices_; }
  const std::vector<int>& face_indices() const { return face_indices_; }
  int domain_dim() const { return domain_dim_; }
  int codomain_dim() const;
  bool is_identity() const;

  // Action on the generic simplex, i.e. the underlying monotone vertex map.
  std::vector<int> vertex_map() const;

  bool operator==(const NormalOperator&) const = default;

 private:
  std::vector<int> degeneracy_indices_;  // strictly decreasing
  std::vector<int> face_indices_;        // strictly increasing
  int domain_dim_ = 0;
};

// Canonical form of a generator word. Throws std::invalid_argument when the
// word is not dimension-consistent applied right-to-left from domain_dim.
NormalOperator normalize(const OpWord& word, int domain_dim);

// outer after inner; requires inner.codomain_dim() == outer.domain_dim().
NormalOperator compose(const NormalOperator& outer, const NormalOperator& inner);

// Adds amount to every face and degeneracy index and to domain_dim.
NormalOperator shift(const NormalOperator& op, int amount);

VertexList apply(const NormalOperator& op, const VertexList& simplex);
VertexList apply_generator(const OpGenerator& gen, const VertexList& simplex);
VertexList apply_word(const OpWord& word, const VertexList& simplex);

// Exponent-compressed word such as "s_0^2 d_1"; the identity prints as "id".
std::string to_string(const NormalOperator& op);

// The word applied to a named generator: "s_0^2 g_3", or "g_3" for the identity.
std::string applied_form(const NormalOperator& op, const std::string& symbol);

// Bracketed vertex list, e.g. "[0 1 2]".
std::string to_string(const VertexList& v);

}  // namespace szmap
