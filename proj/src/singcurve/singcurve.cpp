#include "singcurve/singcurve.hpp"

namespace logvec {

UPoly<Rational> restrict_to_line(const Polynomial& Q, const std::vector<long>& p, const std::vector<long>& d) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < Q.nvars(); ++i)
    images.push_back(Polynomial::constant(1, p[i]) + Polynomial::constant(1, d[i]) * Polynomial::variable(1, 0));
  Polynomial r = substitute(Q, images);
  std::vector<Rational> c(r.is_zero() ? 0 : static_cast<std::size_t>(r.total_degree()) + 1, Rational(0));
  for (const auto& t : r.terms()) c[t.mono.exp[0]] = t.coef;
  return UPoly<Rational>(std::move(c), {});
}

bool is_reduced(const Polynomial& Q, std::uint64_t seed, int tries) {
  if (Q.is_zero()) return false;
  int m = Q.total_degree();
  if (m <= 1) return true;
  SeededDraws draws(seed ^ 0x5eedULL);
  for (int attempt = 0; attempt < tries; ++attempt) {
    long range = 8 + 4L * attempt;
    std::vector<long> p(Q.nvars()), d(Q.nvars());
    for (auto& v : p) v = draws.uniform(-range, range);
    for (auto& v : d) v = draws.uniform(-range, range);
    auto r = restrict_to_line(Q, p, d);
    if (r.degree() != m) continue;  // direction meets the curve at infinity
    if (r.is_squarefree()) return true;
  }
  return false;
}

int genus_smooth(int n) {
  if (n < 1) throw std::invalid_argument("genus needs degree >= 1");
  return (n - 1) * (n - 2) / 2;
}

Arrangement Arrangement::from_components(std::vector<Polynomial> components) {
  if (components.empty()) throw HypothesisError("nonempty", "an arrangement needs at least one component");
  Arrangement a;
  a.product = Polynomial::constant(3, 1L);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.nvars() != 3) throw HypothesisError("ternary", "components must be forms in x, y, z");
    auto g = grading(c);
    if (g.is_zero || g.degree < 1)
      throw HypothesisError("positive_degree", "component " + std::to_string(i + 1) + " is constant");
    if (!g.is_homogeneous)
      throw HypothesisError("homogeneous", "component " + std::to_string(i + 1) + " is not homogeneous");
    a.product *= c;
    a.degree += g.degree;
  }
  if (!is_reduced(a.product))
    throw HypothesisError("reduced", "the product has a repeated factor (components not reduced or not coprime)");
  a.components = std::move(components);
  return a;
}

Arrangement Arrangement::with_curve(const Polynomial& curve) const {
  auto comps = components;
  comps.push_back(curve);
  return from_components(std::move(comps));
}

}  // namespace logvec
