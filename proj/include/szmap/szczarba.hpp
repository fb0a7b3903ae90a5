#pragma once

#include <string>
#include <vector>

#include "szmap/simplex_categories.hpp"
#include "szmap/simplicial_ops.hpp"

namespace szmap {

// The comparison functor on a single morphism: writing
// U = {p = u_0 < u_1 < ... < u_m < u_{m+1} = q}, the k-component position is
// u_{t+1} - k for the unique segment u_t < k <= u_{t+1}. Equivalently, the
// concatenation of the values on the indecomposable pieces {u_t, u_{t+1}}.
GHomElement hin_vertex(const SubsetMorphism& U);

// The ground-truth route: the nerve of hin_vertex applied entry by entry.
// Component j (for k = q - j) is the chain of k-positions of the entries.
std::vector<ChainSimplex<GPosetPosition>> sz_elementwise(const ChainSimplex<SubsetMorphism>& c);

// The positions of one component chain as a vertex list in the (n-k)-simplex.
VertexList position_vertices(const ChainSimplex<GPosetPosition>& component);

// Largest element of {p} union prefix strictly below next. next must lie
// strictly between p and q and not occur in the prefix.
int omega(const SequenceIndex& prefix, int next);

// alpha_k of the full sequence: starts at q - k for the empty sequence and
// drops to i_l - k whenever omega(prefix, i_l) < k <= i_l.
int alpha(int k, const SequenceIndex& i);

// All alpha values along the prefixes of a sequence, plus the omega value
// used at each extension step.
struct AlphaTable {
  int n = 0;
  int p = 0;
  int q = 0;
  SequenceIndex seq;
  // alpha[len][j] = alpha_{q-j} of the length-len prefix, j = 0 .. q-p-1
  std::vector<std::vector<int>> alpha;
  // omega[len-1] = omega of (prefix of length len-1, entry len), len = 1 .. l
  std::vector<int> omega;
};

AlphaTable alpha_table(int n, const SequenceIndex& i);
std::string to_string(const AlphaTable& t);

// The operator for one component, built by induction on the sequence length:
// the empty sequence gives d_1^{n-q} d_0^{q-k}; each extension prepends s_0
// when alpha is unchanged and otherwise composes the index-shifted operator
// with s_0^{alpha+1} d_0^alpha. Domain dimension n-k, codomain the length.
NormalOperator build_operator(const SequenceIndex& i, int k, int n);

struct SzComponent {
  int k = 0;
  NormalOperator op = NormalOperator::identity(0);
  VertexList evaluated;  // action on the generic (n-k)-simplex

  bool operator==(const SzComponent&) const = default;
};

// Value of the map on one nondegenerate simplex: per-k operators with their
// evaluations, ordered k = q down to p+1.
struct SzResult {
  int n = 0;
  int p = 0;
  int q = 0;
  SequenceIndex seq;
  std::vector<SzComponent> components;

  bool operator==(const SzResult&) const = default;
};

SzResult sz_operator_route(const SequenceIndex& i, int n);
std::string to_string(const SzResult& r);  // "(s_0^2 g_3, s_0 g_2, g_1)"

struct InstanceReport {
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<int> seq;
  bool match = false;
  std::string detail;  // empty when the routes agree

  bool operator==(const InstanceReport&) const = default;
};

// Compares the operator route against the element-wise route on one instance.
InstanceReport verify_instance(int n, int p, int q, const SequenceIndex& i);

struct VerifyReport {
  int max_n = 0;
  long long instances = 0;
  long long mismatches = 0;
  std::vector<InstanceReport> failures;  // deterministic order

  bool operator==(const VerifyReport&) const = default;
};

// Exhaustive cross-check over every n <= max_n, 0 <= p < q <= n and every
// injective sequence. The instance space is partitioned across workers.
VerifyReport verify_range(int max_n);
std::string to_string(const VerifyReport& r);

}  // namespace szmap
