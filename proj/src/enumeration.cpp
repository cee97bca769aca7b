#include "cubal/enumeration.hpp"

#include <stdexcept>
#include <string>

namespace cubal {

namespace {

Polynomial one_minus_x_power(int e) { return power(Polynomial::of({1, -1}), e); }

int resolve_d(const FaceComplex& k, std::optional<int> ambient_d, int offset,
              const char* what) {
  const int natural = k.dimension() + offset;
  const int d = ambient_d.value_or(natural < 0 ? 0 : natural);
  if (d < natural) {
    throw std::invalid_argument(std::string("parameter-out-of-range: ") + what +
                                " needs d >= " + std::to_string(natural) + ", got " +
                                std::to_string(d));
  }
  return d;
}

/** Simplicial sum over an explicit list of face indices. */
Polynomial simplicial_sum(const FaceComplex& k, const std::vector<int>& faces, int d) {
  Polynomial h;
  for (int f : faces) {
    const int card = k.dim(f) + 1;
    h = h + Polynomial::monomial(card) * one_minus_x_power(d - card);
  }
  return h;
}

/** Short cubical sum over an explicit list of face indices (empty face skipped). */
Polynomial short_cubical_sum(const FaceComplex& k, const std::vector<int>& faces, int d) {
  Polynomial h;
  for (int f : faces) {
    if (f == k.empty_index()) continue;
    const int dim = k.dim(f);
    h = h + Polynomial::monomial(dim, Coeff(1) << dim) * one_minus_x_power(d - dim);
  }
  return h;
}

std::vector<int> all_faces(const FaceComplex& k) {
  std::vector<int> out(static_cast<std::size_t>(k.size()));
  for (int f = 0; f < k.size(); ++f) out[static_cast<std::size_t>(f)] = f;
  return out;
}

}  // namespace

HVector h_simplicial(const FaceComplex& k, std::optional<int> ambient_d) {
  const int d = resolve_d(k, ambient_d, 1, "h_simplicial");
  return {simplicial_sum(k, all_faces(k), d), d};
}

HVector h_simplicial_interior(const FaceComplex& k) {
  const int d = k.dimension() + 1;
  const auto split = k.boundary_interior();
  return {simplicial_sum(k, split.interior, d), d};
}

HVector h_short_cubical(const FaceComplex& k, std::optional<int> ambient_d) {
  const int d = resolve_d(k, ambient_d, 0, "h_short_cubical");
  return {short_cubical_sum(k, all_faces(k), d), d};
}

HVector h_short_cubical_interior(const FaceComplex& k) {
  const int d = k.dimension() < 0 ? 0 : k.dimension();
  const auto split = k.boundary_interior();
  return {short_cubical_sum(k, split.interior, d), d};
}

long long reduced_euler(const FaceComplex& k) {
  long long chi = 0;
  for (int f = 0; f < k.size(); ++f) {
    // dim -1 (the empty face) and odd dimensions contribute -1.
    chi += (k.dim(f) % 2 == 0) ? 1 : -1;
  }
  return chi;
}

HVector h_long_cubical(const FaceComplex& k) {
  const HVector sc = h_short_cubical(k);
  const int d = sc.d;
  const Coeff two_pow_d = Coeff(1) << d;
  const Coeff signed_two_pow = (d % 2 == 0) ? two_pow_d : -two_pow_d;
  const Coeff euler = reduced_euler(k);

  Polynomial rhs = Polynomial(two_pow_d) + Polynomial::x() * sc.poly +
                   Polynomial::monomial(d + 2, signed_two_pow * euler);
  Polynomial h = exact_div(rhs, Polynomial::of({1, 1}));

  if (h.coeff(0) != two_pow_d || h.coeff(d + 1) != signed_two_pow * euler) {
    throw std::logic_error("internal-inconsistency: forced long cubical h coefficients");
  }
  return {h, d};
}

std::vector<std::pair<int, HVector>> hetyei_decomposition(const FaceComplex& k) {
  if (!k.pure()) {
    throw std::domain_error("not-pure: vertex link decomposition needs a pure complex");
  }
  const int d = k.dimension() < 0 ? 0 : k.dimension();
  std::vector<std::pair<int, HVector>> out;
  for (int f : k.faces_of_dim(0)) {
    FaceComplex lk = k.link(f);
    out.emplace_back(f, h_simplicial(lk, d));
  }
  return out;
}

}  // namespace cubal
