#include "szmap/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <vector>

#include "szmap/simplex_categories.hpp"
#include "szmap/szczarba.hpp"

namespace szmap {

namespace {

std::string coord(double v) {
  if (v == 0.0) v = 0.0;  // normalize negative zero
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Covers in the subset hom: one element removed.
bool covers_c(const SubsetMorphism& lo, const SubsetMorphism& hi) {
  return poset_leq(lo, hi) && lo.members.size() == hi.members.size() + 1;
}

// Covers in the product-of-chains hom: one coordinate incremented.
bool covers_g(const GHomElement& lo, const GHomElement& hi) {
  int diff = 0;
  for (size_t j = 0; j < lo.positions.size(); ++j) {
    const int d = hi.positions[j] - lo.positions[j];
    if (d < 0) return false;
    diff += d;
  }
  return diff == 1;
}

template <typename E, typename Cover>
std::string dot_hasse(const std::vector<E>& elements, const std::string& name, Cover cover) {
  std::string out = "digraph " + name + " {\n  rankdir = BT;\n  node [shape = plaintext];\n";
  for (size_t i = 0; i < elements.size(); ++i)
    out += "  v" + std::to_string(i) + " [label = \"" + to_string(elements[i]) + "\"];\n";
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = 0; j < elements.size(); ++j)
      if (i != j && cover(elements[i], elements[j]))
        out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

template <typename E>
std::string hom_label(std::vector<E> elements) {
  if (elements.size() > 6) return std::to_string(elements.size()) + " morphisms";
  bool chain = true;
  for (size_t i = 0; i < elements.size() && chain; ++i)
    for (size_t j = i + 1; j < elements.size() && chain; ++j)
      if (!poset_leq(elements[i], elements[j]) && !poset_leq(elements[j], elements[i]))
        chain = false;
  if (chain)
    std::sort(elements.begin(), elements.end(),
              [](const E& a, const E& b) { return poset_leq(a, b) && !(a == b); });
  std::string out;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += chain ? " <= " : ", ";
    out += to_string(elements[i]);
  }
  return out;
}

std::string tex_power(const std::string& head, int exponent) {
  if (exponent <= 0) return "";
  if (exponent == 1) return head;
  return head + "^{" + std::to_string(exponent) + "}";
}

std::string tex_subset(const SubsetMorphism& U) {
  std::string out = "$\\{";
  for (size_t i = 0; i < U.members.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(U.members[i]);
  }
  out += "\\}$";
  return out;
}

std::string tex_ghom(const GHomElement& x) {
  if (x.p == x.q) return "$\\mathrm{id}_{" + std::to_string(x.q) + "}$";
  std::string out = "$(";
  for (int j = 0; j < static_cast<int>(x.positions.size()); ++j) {
    if (j > 0) out += ", ";
    const int k = x.q - j;
    const int a = x.positions[static_cast<size_t>(j)];
    std::string piece = tex_power("d_{1}", x.n - k - a);
    const std::string d0 = tex_power("d_{0}", a);
    if (!d0.empty()) piece += (piece.empty() ? "" : " ") + d0;
    if (!piece.empty()) piece += ' ';
    piece += "g_{" + std::to_string(k) + "}";
    out += piece;
  }
  out += ")$";
  return out;
}

// Layered coordinates: x advances with the rank, nodes of equal rank are
// stacked vertically and centered.
std::vector<std::pair<double, double>> layered_coords(const std::vector<int>& ranks,
                                                      double x0, double dx, double dy) {
  std::map<int, int> per_rank_count;
  for (int r : ranks) ++per_rank_count[r];
  std::map<int, int> seen;
  std::vector<std::pair<double, double>> out;
  out.reserve(ranks.size());
  for (int r : ranks) {
    const int idx = seen[r]++;
    const double y = -dy * (idx - (per_rank_count[r] - 1) / 2.0);
    out.emplace_back(x0 + dx * r, y);
  }
  return out;
}

}  // namespace

std::string dot_hasse_c(int n, int p, int q) {
  const auto elements = enumerate_c_hom(n, p, q);
  return dot_hasse(elements, "hom_c", covers_c);
}

std::string dot_hasse_g(int n, int p, int q) {
  const auto elements = enumerate_g_hom(n, p, q);
  return dot_hasse(elements, "hom_g", covers_g);
}

std::string dot_category_picture(char family, int n) {
  if (family != 'c' && family != 'g')
    throw std::invalid_argument("family must be 'c' or 'g'");
  std::string out = "digraph enriched {\n  rankdir = LR;\n  node [shape = circle];\n";
  for (int v = 0; v <= n; ++v) out += "  o" + std::to_string(v) + " [label = \"" +
                                      std::to_string(v) + "\"];\n";
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      const std::string label = family == 'c' ? hom_label(enumerate_c_hom(n, p, q))
                                              : hom_label(enumerate_g_hom(n, p, q));
      out += "  o" + std::to_string(p) + " -> o" + std::to_string(q) + " [label = \"" +
             label + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string tikz_two_panel(int n, int p, int q) {
  const auto subsets = enumerate_c_hom(n, p, q);
  const auto gelems = enumerate_g_hom(n, p, q);

  // image of the comparison map, as indices into gelems
  std::vector<int> image_of(subsets.size());
  std::vector<char> in_image(gelems.size(), 0);
  for (size_t i = 0; i < subsets.size(); ++i) {
    const GHomElement h = hin_vertex(subsets[i]);
    const auto it = std::find(gelems.begin(), gelems.end(), h);
    image_of[i] = static_cast<int>(it - gelems.begin());
    in_image[static_cast<size_t>(image_of[i])] = 1;
  }

  // nondegenerate 1-simplices of each nerve
  std::vector<std::pair<int, int>> c_pairs, g_pairs;
  for (size_t i = 0; i < subsets.size(); ++i)
    for (size_t j = 0; j < subsets.size(); ++j)
      if (i != j && poset_leq(subsets[i], subsets[j]))
        c_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  for (size_t i = 0; i < gelems.size(); ++i)
    for (size_t j = 0; j < gelems.size(); ++j)
      if (i != j && poset_leq(gelems[i], gelems[j]))
        g_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::pair<int, int>> image_pairs;
  for (const auto& [i, j] : c_pairs) image_pairs.emplace_back(image_of[i], image_of[j]);

  std::vector<int> c_ranks, g_ranks;
  for (const auto& U : subsets)
    c_ranks.push_back(q - p + 1 - static_cast<int>(U.members.size()));
  int c_max_rank = 0;
  for (int r : c_ranks) c_max_rank = std::max(c_max_rank, r);
  for (const auto& x : gelems) {
    int s = 0;
    for (int a : x.positions) s += a;
    g_ranks.push_back(s);
  }
  const double dx = 3.4, dy = 1.7;
  const auto c_coords = layered_coords(c_ranks, 0.0, dx, dy);
  const auto g_coords = layered_coords(g_ranks, dx * (c_max_rank + 2), dx, dy);

  std::string out;
  out += "\\documentclass[tikz]{standalone}\n";
  out += "\\usetikzlibrary{arrows.meta}\n";
  out += "\\begin{document}\n";
  out += "\\begin{tikzpicture}[>=Stealth, every node/.style={font=\\small}]\n";
  out += "% hom of the subset side\n";
  for (size_t i = 0; i < subsets.size(); ++i)
    out += "\\node (c" + std::to_string(i) + ") at (" + coord(c_coords[i].first) + ", " +
           coord(c_coords[i].second) + ") {" + tex_subset(subsets[i]) + "};\n";
  for (const auto& [i, j] : c_pairs)
    out += "\\draw[->] (c" + std::to_string(i) + ") -- (c" + std::to_string(j) + ");\n";
  out += "% hom of the loop-group side; red marks the image of the comparison map\n";
  for (size_t i = 0; i < gelems.size(); ++i)
    out += std::string("\\node") + (in_image[i] ? "[red]" : "") + " (g" + std::to_string(i) +
           ") at (" + coord(g_coords[i].first) + ", " + coord(g_coords[i].second) + ") {" +
           tex_ghom(gelems[i]) + "};\n";
  for (const auto& [i, j] : g_pairs) {
    const bool red = std::find(image_pairs.begin(), image_pairs.end(),
                               std::make_pair(i, j)) != image_pairs.end();
    out += std::string("\\draw[->") + (red ? ", red" : "") + "] (g" + std::to_string(i) +
           ") -- (g" + std::to_string(j) + ");\n";
  }
  out += "\\end{tikzpicture}\n";
  out += "\\end{document}\n";
  return out;
}

}  // namespace szmap
