// Times the OpenMP kernels against their serial reference twins and checks
// that both produce identical results.
//
//   ./bench_kernels [gale_m] [poly_n] [canon_n] [links_m]
//
// Defaults: gale_m=44, poly_n=20, canon_n=3, links_m=100.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include "spherewright/cyclic.hpp"
#include "spherewright/enumerate.hpp"
#include "spherewright/parallel.hpp"
#include "spherewright/verify.hpp"

using namespace spherewright;
using h_clock = std::chrono::steady_clock;

namespace {

template <typename F>
double timed(F&& f) {
  const auto t0 = h_clock::now();
  f();
  return std::chrono::duration<double>(h_clock::now() - t0).count();
}

void row(const std::string& kernel, const std::string& size, double serial, double parallel,
         bool equal) {
  std::cout << std::left << std::setw(22) << kernel << std::setw(18) << size << std::right
            << std::fixed << std::setprecision(3) << std::setw(10) << serial << " s"
            << std::setw(10) << parallel << " s" << std::setw(8) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "x   "
            << (equal ? "results equal" : "RESULTS DIFFER") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int gale_m = argc > 1 ? std::stoi(argv[1]) : 44;
  const int poly_n = argc > 2 ? std::stoi(argv[2]) : 20;
  const int canon_n = argc > 3 ? std::stoi(argv[3]) : 3;
  const int links_m = argc > 4 ? std::stoi(argv[4]) : 100;

  std::cout << "threads: " << thread_count() << "\n\n";
  std::cout << std::left << std::setw(22) << "kernel" << std::setw(18) << "size" << std::right
            << std::setw(12) << "serial" << std::setw(12) << "parallel" << std::setw(9)
            << "speedup" << '\n';

  {
    std::vector<Simplex> serial_out, parallel_out;
    const double ts = timed([&] { serial_out = cyclic_facets_serial(gale_m); });
    const double tp = timed([&] { parallel_out = cyclic_facets(gale_m); });
    row("gale-filter", "m=" + std::to_string(gale_m), ts, tp, serial_out == parallel_out);
  }

  {
    const auto q = build_bipyramid_sphere(poly_n, Variant::Extended);
    std::vector<PolyViolation> vs, vp;
    const double ts = timed([&] { vs = polyhedrality_violations_serial(q); });
    const double tp = timed([&] { vp = polyhedrality_violations(q); });
    row("polyhedrality-sweep",
        "n=" + std::to_string(poly_n) + ", " + std::to_string(q.cell_count()) + " cells", ts, tp,
        vs.empty() == vp.empty() && vs.size() == vp.size());
  }

  {
    const auto q = build_bipyramid_sphere(canon_n, Variant::Extended);
    const std::uint64_t total = std::uint64_t{1} << q.bipyramids.size();
    std::vector<SimplicialComplex> xs;
    xs.reserve(total);
    for (std::uint64_t j = 0; j < total; ++j) {
      xs.push_back(realize(q, TriangulationMask::from_index(j, q.bipyramids.size())));
    }
    std::vector<CanonicalForm> fs, fp;
    const double ts = timed([&] { fs = canonical_forms_serial(xs); });
    const double tp = timed([&] { fp = canonical_forms(xs); });
    bool equal = fs.size() == fp.size();
    for (std::size_t i = 0; equal && i < fs.size(); ++i) equal = fs[i] == fp[i];
    row("canonical-fanout", "n=" + std::to_string(canon_n) + ", " + std::to_string(total) +
        " masks", ts, tp, equal);
  }

  {
    const auto sphere = cyclic_sphere(links_m);
    std::vector<SurfaceClass> cs, cp;
    const double ts = timed([&] { cs = vertex_link_classes_serial(sphere); });
    const double tp = timed([&] { cp = vertex_link_classes(sphere); });
    row("vertex-link-classify",
        "m=" + std::to_string(links_m) + ", " + std::to_string(sphere.facet_count()) + " cells",
        ts, tp, cs == cp);
  }

  return 0;
}
