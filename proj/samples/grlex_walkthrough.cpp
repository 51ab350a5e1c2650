// Build a grlex instance, print its vertices and inequalities, and check the
// closed forms against an explicit enumeration of the lattice points.

#include <iostream>

#include "dantzig/dantzig.hpp"

int main() {
  using namespace dantzig;
  const GrlexInstance p(IntVector{2, 3, 2});

  const VRep v = grlex_vertices(p);
  std::cout << "vertices (" << v.size() << "):\n";
  for (const auto& lv : v.vertices) {
    std::cout << "  " << to_string(lv.label) << " =";
    for (auto x : lv.x) std::cout << ' ' << x;
    std::cout << '\n';
  }

  const HRep h = grlex_hrep(p);
  std::cout << '\n' << write_ine(h, "grlex theta=2,3,2");

  const auto seg = enumerate_segment(OrderKind::GrLex, p.theta);
  const auto report = verify_hull_equivalence(seg, h, v);
  std::cout << "\nsegment points: " << seg.points.size() << "\nhull check: " << (report.all_passed() ? "ok" : "FAILED")
            << '\n';

  const auto g = grlex_graph(p);
  const auto ecc = eccentricities(g);
  std::cout << "edges: " << g.edge_count() << ", radius " << ecc.radius << ", diameter " << ecc.diameter << '\n';
  return report.all_passed() ? 0 : 1;
}
