#include "spherewright/ball.hpp"

#include <algorithm>
#include <numeric>

#include "spherewright/errors.hpp"

namespace spherewright {

std::string to_string(Variant v) {
  return v == Variant::Literal ? "literal" : "extended";
}

Rational Rational::of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  return Rational{g ? num / g : num, g ? den / g : den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<int> ball_centers(int n) {
  if (n < 1) throw InvalidNError("n must be at least 1, got " + std::to_string(n));
  std::vector<int> out;
  for (int m = n + 2; m <= 3 * n + 1; ++m) {
    if (m % 2 == 0) out.push_back(m);
  }
  return out;
}

namespace {

bool is_center(int a, int n) {
  return a % 2 == 0 && a >= n + 2 && a <= 3 * n + 1;
}

void require_site(int a, int u, int n, bool allow_zero_width) {
  if (n < 1) throw InvalidNError("n must be at least 1, got " + std::to_string(n));
  if (!is_center(a, n)) {
    throw OutOfRangeError("a=" + std::to_string(a) + " is not a ball center for n=" +
                          std::to_string(n));
  }
  const int lo = allow_zero_width ? 0 : 1;
  if (u < lo || u > n) {
    throw OutOfRangeError("width u=" + std::to_string(u) + " out of range for n=" +
                          std::to_string(n));
  }
}

}  // namespace

Simplex ball_facet(int a, int u, int layer, int n) {
  require_site(a, u, n, /*allow_zero_width=*/true);
  if (layer < 1 || layer > 3) {
    throw OutOfRangeError("layer must be 1, 2 or 3, got " + std::to_string(layer));
  }
  if (u == 0 && layer != 2) {
    throw OutOfRangeError("width 0 is only defined at layer 2");
  }
  Simplex f;
  switch (layer) {
    case 1: f = Simplex{a - u - 1, a - u, a + u, a + u + 1}; break;
    case 2: f = Simplex{a - u - 1, a - u, a + u + 1, a + u + 2}; break;
    default: f = Simplex{a - u, a - u + 1, a + u + 1, a + u + 2}; break;
  }
  const int m = 4 * n + 4;
  if (f.vertices().front() < 1 || f.vertices().back() > m) {
    throw OutOfRangeError("facet " + f.str() + " leaves [1," + std::to_string(m) + "]");
  }
  return f;
}

Rational label_average(const Simplex& f) {
  if (f.empty()) throw std::invalid_argument("label average of the empty simplex");
  long long sum = 0;
  for (VertexId v : f.vertices()) sum += v;
  return Rational::of(sum, static_cast<long long>(f.size()));
}

SiteFaces site_faces(int a, int u, int n) {
  require_site(a, u, n, /*allow_zero_width=*/false);
  SiteFaces s;
  s.center = a;
  s.width = u;
  s.facet1 = ball_facet(a, u, 1, n);
  s.facet2 = ball_facet(a, u, 2, n);
  s.facet3 = ball_facet(a, u, 3, n);
  s.missing_edge = Simplex{a - u, a + u + 1};
  s.tri_minus = Simplex{a - u - 1, a - u, a + u};
  s.tri_plus = Simplex{a - u - 1, a + u, a + u + 1};
  s.disk = SimplicialComplex::from_facets({s.tri_minus, s.tri_plus});
  s.hinge = s.tri_minus.intersection(s.tri_plus);
  return s;
}

SimplicialComplex build_ball(int a, int n, Variant variant) {
  require_site(a, 1, n, false);
  std::vector<Simplex> facets;
  for (int u = 1; u <= n; ++u) {
    for (int layer = 1; layer <= 3; ++layer) {
      facets.push_back(ball_facet(a, u, layer, n));
    }
  }
  if (variant == Variant::Extended) {
    facets.push_back(ball_facet(a, 0, 2, n));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<Simplex> ShellingCertificate::ordered_facets() const {
  std::vector<Simplex> out;
  out.reserve(steps.size());
  for (const ShellingStep& s : steps) out.push_back(s.facet);
  return out;
}

ShellingCertificate shelling_order(int a, int n, Variant variant) {
  require_site(a, 1, n, false);
  ShellingCertificate cert;
  cert.center = a;
  cert.n = n;
  cert.variant = variant;

  std::vector<Simplex> order;
  if (variant == Variant::Extended) order.push_back(ball_facet(a, 0, 2, n));
  for (int i = 1; i <= 3 * n; ++i) {
    const int u = (i + 2) / 3;
    const int layer = (i - 1) % 3 + 1;
    order.push_back(ball_facet(a, u, layer, n));
  }

  // Record the actual gluing triangles: 2-faces of the new facet already
  // present in the union of the prior ones.
  std::vector<Simplex> prior;
  for (const Simplex& f : order) {
    ShellingStep step;
    step.facet = f;
    if (!prior.empty()) {
      const SimplicialComplex partial = SimplicialComplex::from_facets(prior);
      for (const Simplex& t : f.faces_of_dim(2)) {
        if (partial.contains(t)) step.gluing.push_back(t);
      }
    }
    cert.steps.push_back(std::move(step));
    prior.push_back(f);
  }
  return cert;
}

}  // namespace spherewright
