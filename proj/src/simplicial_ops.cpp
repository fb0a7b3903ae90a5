#include "szmap/simplicial_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace szmap {

namespace {

// Compress maximal runs of consecutive indices into letter_base^len tokens.
// Degeneracy blocks are strictly decreasing, face blocks strictly increasing,
// so runs step by -1 resp. +1 and the power identities s_b^r = s_{b+r-1}..s_b
// and d_b^r = d_b..d_{b+r-1} recover the block exactly.
std::string run_tokens(const std::vector<int>& indices, char letter, int step) {
  std::string out;
  size_t r = 0;
  while (r < indices.size()) {
    size_t s = r + 1;
    while (s < indices.size() && indices[s] == indices[s - 1] + step) ++s;
    const int base = std::min(indices[r], indices[s - 1]);
    const int len = static_cast<int>(s - r);
    if (!out.empty()) out += ' ';
    out += letter;
    out += '_';
    out += std::to_string(base);
    if (len > 1) {
      out += '^';
      out += std::to_string(len);
    }
    r = s;
  }
  return out;
}

}  // namespace

VertexList::VertexList(std::vector<int> vs) : vertices(std::move(vs)) {
  if (vertices.empty()) throw std::invalid_argument("vertex list must be nonempty");
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0) throw std::invalid_argument("vertex list entries must be non-negative");
    if (i > 0 && vertices[i] < vertices[i - 1])
      throw std::invalid_argument("vertex list must be weakly increasing");
  }
}

bool VertexList::nondegenerate() const {
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1]) return false;
  return true;
}

VertexList generic_simplex(int dim) {
  if (dim < 0) throw std::invalid_argument("simplex dimension must be non-negative");
  std::vector<int> vs(static_cast<size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) vs[static_cast<size_t>(i)] = i;
  return VertexList(std::move(vs));
}

NormalOperator::NormalOperator(std::vector<int> degeneracies, std::vector<int> faces,
                               int domain_dim)
    : degeneracy_indices_(std::move(degeneracies)),
      face_indices_(std::move(faces)),
      domain_dim_(domain_dim) {
  if (domain_dim_ < 0) throw std::invalid_argument("domain dimension must be non-negative");
  for (size_t i = 0; i < face_indices_.size(); ++i) {
    if (face_indices_[i] < 0 || face_indices_[i] > domain_dim_)
      throw std::invalid_argument("face index out of range for domain dimension");
    if (i > 0 && face_indices_[i] <= face_indices_[i - 1])
      throw std::invalid_argument("face indices must be strictly increasing");
  }
  if (static_cast<int>(face_indices_.size()) > domain_dim_)
    throw std::invalid_argument("face block would delete every vertex");
  const int cod = codomain_dim();
  for (size_t i = 0; i < degeneracy_indices_.size(); ++i) {
    if (degeneracy_indices_[i] < 0 || degeneracy_indices_[i] > cod - 1)
      throw std::invalid_argument("degeneracy index out of range for codomain dimension");
    if (i > 0 && degeneracy_indices_[i] >= degeneracy_indices_[i - 1])
      throw std::invalid_argument("degeneracy indices must be strictly decreasing");
  }
}

NormalOperator NormalOperator::identity(int domain_dim) {
  return NormalOperator({}, {}, domain_dim);
}

NormalOperator NormalOperator::from_vertex_map(const std::vector<int>& image, int domain_dim) {
  if (domain_dim < 0) throw std::invalid_argument("domain dimension must be non-negative");
  if (image.empty()) throw std::invalid_argument("vertex map must be nonempty");
  for (size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 0 || image[i] > domain_dim)
      throw std::invalid_argument("vertex map value out of range");
    if (i > 0 && image[i] < image[i - 1])
      throw std::invalid_argument("vertex map must be weakly increasing");
  }
  // Faces are the vertices missing from the image, degeneracies the
  // positions where consecutive values coincide.
  std::vector<int> faces;
  size_t r = 0;
  for (int v = 0; v <= domain_dim; ++v) {
    while (r < image.size() && image[r] < v) ++r;
    if (r == image.size() || image[r] != v) faces.push_back(v);
  }
  std::vector<int> degs;
  for (int j = static_cast<int>(image.size()) - 2; j >= 0; --j)
    if (image[static_cast<size_t>(j)] == image[static_cast<size_t>(j) + 1]) degs.push_back(j);
  return NormalOperator(std::move(degs), std::move(faces), domain_dim);
}

int NormalOperator::codomain_dim() const {
  return domain_dim_ - static_cast<int>(face_indices_.size()) +
         static_cast<int>(degeneracy_indices_.size());
}

bool NormalOperator::is_identity() const {
  return degeneracy_indices_.empty() && face_indices_.empty();
}

std::vector<int> NormalOperator::vertex_map() const {
  // Surviving vertices after the face block, in order.
  std::vector<int> kept;
  kept.reserve(static_cast<size_t>(domain_dim_) + 1 - face_indices_.size());
  {
    size_t f = 0;
    for (int v = 0; v <= domain_dim_; ++v) {
      if (f < face_indices_.size() && face_indices_[f] == v) {
        ++f;
        continue;
      }
      kept.push_back(v);
    }
  }
  const int cod = codomain_dim();
  std::vector<char> collapse(static_cast<size_t>(std::max(cod, 0)), 0);
  for (int j : degeneracy_indices_) collapse[static_cast<size_t>(j)] = 1;
  std::vector<int> out;
  out.reserve(static_cast<size_t>(cod) + 1);
  size_t idx = 0;
  out.push_back(kept[0]);
  for (int j = 0; j < cod; ++j) {
    if (!collapse[static_cast<size_t>(j)]) ++idx;
    out.push_back(kept[idx]);
  }
  return out;
}

NormalOperator normalize(const OpWord& word, int domain_dim) {
  VertexList cur = generic_simplex(domain_dim);
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_generator(*it, cur);
  return NormalOperator::from_vertex_map(cur.vertices, domain_dim);
}

NormalOperator compose(const NormalOperator& outer, const NormalOperator& inner) {
  if (inner.codomain_dim() != outer.domain_dim())
    throw std::invalid_argument("compose: inner codomain dimension != outer domain dimension");
  const std::vector<int> inner_map = inner.vertex_map();
  const std::vector<int> outer_map = outer.vertex_map();
  std::vector<int> composite(outer_map.size());
  for (size_t r = 0; r < outer_map.size(); ++r)
    composite[r] = inner_map[static_cast<size_t>(outer_map[r])];
  return NormalOperator::from_vertex_map(composite, inner.domain_dim());
}

NormalOperator shift(const NormalOperator& op, int amount) {
  if (amount < 0) throw std::invalid_argument("shift amount must be non-negative");
  std::vector<int> degs = op.degeneracy_indices();
  std::vector<int> faces = op.face_indices();
  for (int& j : degs) j += amount;
  for (int& i : faces) i += amount;
  return NormalOperator(std::move(degs), std::move(faces), op.domain_dim() + amount);
}

VertexList apply(const NormalOperator& op, const VertexList& simplex) {
  if (simplex.dim() != op.domain_dim())
    throw std::invalid_argument("apply: simplex dimension != operator domain dimension");
  const std::vector<int> phi = op.vertex_map();
  std::vector<int> out(phi.size());
  for (size_t r = 0; r < phi.size(); ++r)
    out[r] = simplex.vertices[static_cast<size_t>(phi[r])];
  return VertexList(std::move(out));
}

VertexList apply_generator(const OpGenerator& gen, const VertexList& simplex) {
  const int dim = simplex.dim();
  std::vector<int> vs = simplex.vertices;
  if (gen.kind == OpGenerator::Kind::face) {
    if (dim < 1) throw std::invalid_argument("face applied to a 0-simplex");
    if (gen.index < 0 || gen.index > dim)
      throw std::invalid_argument("face index out of range for simplex dimension");
    vs.erase(vs.begin() + gen.index);
  } else {
    if (gen.index < 0 || gen.index > dim)
      throw std::invalid_argument("degeneracy index out of range for simplex dimension");
    vs.insert(vs.begin() + gen.index, vs[static_cast<size_t>(gen.index)]);
  }
  return VertexList(std::move(vs));
}

VertexList apply_word(const OpWord& word, const VertexList& simplex) {
  VertexList cur = simplex;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_generator(*it, cur);
  return cur;
}

std::string to_string(const NormalOperator& op) {
  if (op.is_identity()) return "id";
  std::string out = run_tokens(op.degeneracy_indices(), 's', -1);
  const std::string faces = run_tokens(op.face_indices(), 'd', +1);
  if (!faces.empty()) {
    if (!out.empty()) out += ' ';
    out += faces;
  }
  return out;
}

std::string applied_form(const NormalOperator& op, const std::string& symbol) {
  if (op.is_identity()) return symbol;
  return to_string(op) + " " + symbol;
}

std::string to_string(const VertexList& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.vertices.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v.vertices[i]);
  }
  out += ']';
  return out;
}

}  // namespace szmap
