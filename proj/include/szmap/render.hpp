#pragma once

#include <string>

namespace szmap {

// Hasse diagram of one hom poset, edges drawn from lower to upper covers.
std::string dot_hasse_c(int n, int p, int q);
std::string dot_hasse_g(int n, int p, int q);

// Objects 0..n with one arrow per hom, labeled by the hom poset.
// family is 'c' (subset side) or 'g' (loop-group side).
std::string dot_category_picture(char family, int n);

// Standalone TikZ document with the subset-side hom on the left, the
// loop-group-side hom on the right, and the image of the comparison map
// highlighted in red. Arrows are the nondegenerate 1-simplices of the nerves.
std::string tikz_two_panel(int n, int p, int q);

}  // namespace szmap
