#include "szmap/szczarba.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace szmap {

GHomElement hin_vertex(const SubsetMorphism& U) {
  std::vector<int> positions;
  positions.reserve(static_cast<size_t>(U.q - U.p));
  for (int k = U.q; k >= U.p + 1; --k) {
    // least member of U that is >= k; exists since q is a member
    const auto it = std::lower_bound(U.members.begin(), U.members.end(), k);
    positions.push_back(*it - k);
  }
  return GHomElement(U.n, U.p, U.q, std::move(positions));
}

std::vector<ChainSimplex<GPosetPosition>> sz_elementwise(const ChainSimplex<SubsetMorphism>& c) {
  const SubsetMorphism& first = c.entries.front();
  const int n = first.n, p = first.p, q = first.q;
  std::vector<GHomElement> images;
  images.reserve(c.entries.size());
  for (const SubsetMorphism& U : c.entries) images.push_back(hin_vertex(U));
  std::vector<ChainSimplex<GPosetPosition>> out;
  out.reserve(static_cast<size_t>(q - p));
  for (int k = q; k >= p + 1; --k) {
    std::vector<GPosetPosition> entries;
    entries.reserve(images.size());
    for (const GHomElement& h : images) entries.emplace_back(n, k, h.position(k));
    out.push_back(make_chain(std::move(entries)));
  }
  return out;
}

VertexList position_vertices(const ChainSimplex<GPosetPosition>& component) {
  std::vector<int> vs;
  vs.reserve(component.entries.size());
  for (const GPosetPosition& x : component.entries) vs.push_back(x.a);
  return VertexList(std::move(vs));
}

int omega(const SequenceIndex& prefix, int next) {
  if (next <= prefix.p || next >= prefix.q)
    throw std::invalid_argument("omega: value must lie strictly between p and q");
  int w = prefix.p;
  for (int e : prefix.entries) {
    if (e == next)
      throw std::invalid_argument("omega: value already occurs in the prefix");
    if (e < next && e > w) w = e;
  }
  return w;
}

namespace {

// alpha values of every prefix of i for a fixed k, last entry = alpha_k(i)
std::vector<int> alpha_trace(int k, const SequenceIndex& i) {
  std::vector<int> trace;
  trace.reserve(i.entries.size() + 1);
  int a = i.q - k;
  trace.push_back(a);
  for (size_t len = 1; len <= i.entries.size(); ++len) {
    const int next = i.entries[len - 1];
    int w = i.p;
    for (size_t r = 0; r + 1 < len; ++r) {
      const int e = i.entries[r];
      if (e < next && e > w) w = e;
    }
    if (w < k && k <= next) a = next - k;
    trace.push_back(a);
  }
  return trace;
}

}  // namespace

int alpha(int k, const SequenceIndex& i) {
  if (k <= i.p || k > i.q)
    throw std::invalid_argument("alpha: component index k must satisfy p < k <= q");
  return alpha_trace(k, i).back();
}

AlphaTable alpha_table(int n, const SequenceIndex& i) {
  if (n < i.q) throw std::invalid_argument("ambient dimension must be at least q");
  AlphaTable t;
  t.n = n;
  t.p = i.p;
  t.q = i.q;
  t.seq = i;
  const int l = i.length();
  t.alpha.assign(static_cast<size_t>(l) + 1, {});
  for (int k = i.q; k >= i.p + 1; --k) {
    const std::vector<int> trace = alpha_trace(k, i);
    for (int len = 0; len <= l; ++len)
      t.alpha[static_cast<size_t>(len)].push_back(trace[static_cast<size_t>(len)]);
  }
  for (int len = 1; len <= l; ++len) {
    SequenceIndex prefix(i.p, i.q,
                         std::vector<int>(i.entries.begin(), i.entries.begin() + (len - 1)));
    t.omega.push_back(omega(prefix, i.entries[static_cast<size_t>(len - 1)]));
  }
  return t;
}

std::string to_string(const AlphaTable& t) {
  auto row = [&](int len) {
    std::string out = "(";
    for (size_t j = 0; j < t.alpha[static_cast<size_t>(len)].size(); ++j) {
      if (j > 0) out += ", ";
      out += std::to_string(t.alpha[static_cast<size_t>(len)][j]);
    }
    out += ')';
    return out;
  };
  auto prefix_str = [&](int len) {
    std::string out = "(";
    for (int j = 0; j < len; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(t.seq.entries[static_cast<size_t>(j)]);
    }
    out += ')';
    return out;
  };
  std::string out = "alpha, components k = " + std::to_string(t.q) + ".." +
                    std::to_string(t.p + 1) + "\n";
  out += "alpha[()] = " + row(0) + "\n";
  for (int len = 1; len <= t.seq.length(); ++len) {
    out += "omega[" + prefix_str(len) + "] = " +
           std::to_string(t.omega[static_cast<size_t>(len - 1)]) + ", alpha[" +
           prefix_str(len) + "] = " + row(len) + "\n";
  }
  return out;
}

NormalOperator build_operator(const SequenceIndex& i, int k, int n) {
  if (n < i.q) throw std::invalid_argument("ambient dimension must be at least q");
  if (k <= i.p || k > i.q)
    throw std::invalid_argument("component index k must satisfy p < k <= q");
  // empty sequence: d_1^{n-q} d_0^{q-k} on the (n-k)-simplex
  OpWord base;
  for (int t = 0; t < n - i.q; ++t) base.push_back(face_gen(1));
  for (int t = 0; t < i.q - k; ++t) base.push_back(face_gen(0));
  NormalOperator op = normalize(base, n - k);

  const std::vector<int> trace = alpha_trace(k, i);
  for (size_t len = 1; len < trace.size(); ++len) {
    const int prev = trace[len - 1];
    const int cur = trace[len];
    if (cur == prev) {
      op = compose(NormalOperator({0}, {}, op.codomain_dim()), op);
    } else if (cur < prev) {
      OpWord step;
      for (int t = 0; t < cur + 1; ++t) step.push_back(degeneracy_gen(0));
      for (int t = 0; t < cur; ++t) step.push_back(face_gen(0));
      op = compose(shift(op, 1), normalize(step, n - k));
    } else {
      throw std::logic_error("alpha increased along a prefix");
    }
  }
  return op;
}

SzResult sz_operator_route(const SequenceIndex& i, int n) {
  SzResult r;
  r.n = n;
  r.p = i.p;
  r.q = i.q;
  r.seq = i;
  for (int k = i.q; k >= i.p + 1; --k) {
    NormalOperator op = build_operator(i, k, n);
    VertexList eval = apply(op, generic_simplex(n - k));
    r.components.push_back(SzComponent{k, std::move(op), std::move(eval)});
  }
  return r;
}

std::string to_string(const SzResult& r) {
  std::string out = "(";
  for (size_t j = 0; j < r.components.size(); ++j) {
    if (j > 0) out += ", ";
    out += applied_form(r.components[j].op, "g_" + std::to_string(r.components[j].k));
  }
  out += ')';
  return out;
}

InstanceReport verify_instance(int n, int p, int q, const SequenceIndex& i) {
  if (i.p != p || i.q != q) throw std::invalid_argument("sequence endpoints do not match hom");
  InstanceReport rep;
  rep.n = n;
  rep.p = p;
  rep.q = q;
  rep.seq = i.entries;
  rep.match = true;

  const SzResult viaOps = sz_operator_route(i, n);
  const auto viaNerve = sz_elementwise(seq_to_chain(i, n));
  for (size_t j = 0; j < viaOps.components.size(); ++j) {
    const SzComponent& comp = viaOps.components[j];
    const VertexList expected = position_vertices(viaNerve[j]);
    const bool arity_ok =
        comp.op.domain_dim() == n - comp.k && comp.op.codomain_dim() == i.length();
    if (!arity_ok || !(comp.evaluated == expected)) {
      rep.match = false;
      if (!rep.detail.empty()) rep.detail += "; ";
      rep.detail += "k=" + std::to_string(comp.k) + ": operator route " +
                    to_string(comp.evaluated) + " vs element-wise " + to_string(expected);
    }
  }
  return rep;
}

namespace {

VerifyReport verify_single_n(int n) {
  VerifyReport rep;
  rep.max_n = n;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int len = 0; len <= q - p - 1; ++len) {
        for (const SequenceIndex& i : enumerate_sequences(p, q, len)) {
          ++rep.instances;
          InstanceReport inst = verify_instance(n, p, q, i);
          if (!inst.match) {
            ++rep.mismatches;
            rep.failures.push_back(std::move(inst));
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace

VerifyReport verify_range(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  std::vector<std::future<VerifyReport>> parts;
  parts.reserve(static_cast<size_t>(max_n));
  for (int n = 1; n <= max_n; ++n)
    parts.push_back(std::async(std::launch::async, verify_single_n, n));
  VerifyReport rep;
  rep.max_n = max_n;
  for (auto& part : parts) {
    VerifyReport sub = part.get();
    rep.instances += sub.instances;
    rep.mismatches += sub.mismatches;
    for (auto& f : sub.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

std::string to_string(const VerifyReport& r) {
  std::string out = "verified " + std::to_string(r.instances) +
                    " instances over all (n <= " + std::to_string(r.max_n) +
                    ", 0 <= p < q <= n, injective sequences): " +
                    std::to_string(r.mismatches) + " mismatches\n";
  for (const InstanceReport& f : r.failures) {
    out += "mismatch at n=" + std::to_string(f.n) + " p=" + std::to_string(f.p) +
           " q=" + std::to_string(f.q) + " seq=" +
           to_string(SequenceIndex(f.p, f.q, f.seq)) + ": " + f.detail + "\n";
  }
  return out;
}

}  // namespace szmap
