#include "cubal/formal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubal/polynomial.hpp"

namespace cubal {

namespace {

const Polynomial kZero;

bool same_host(const Poset& a, const Poset& b) {
  return &a == &b || a.same_structure(b);
}

void require_same_host(const Poset& a, const Poset& b, const char* what) {
  if (!same_host(a, b))
    throw std::invalid_argument(std::string("host-mismatch: ") + what +
                                " needs operands over the same poset");
}

/** The part of `p` of degree at most `bound` (zero when bound < 0). */
Polynomial low_part(const Polynomial& p, int bound) {
  std::vector<Coeff> c;
  if (auto deg = p.degree()) {
    for (int i = 0; i <= bound && i <= *deg; ++i) c.push_back(p.coeff(i));
  }
  return Polynomial(c);
}

int graded_interval_rank(const Poset& p, int s, int t, const char* error_prefix) {
  try {
    return p.interval_rank(s, t);
  } catch (const std::domain_error&) {
    throw std::domain_error(std::string(error_prefix) + ": the interval [" + p.id_of(s) +
                            ", " + p.id_of(t) + "] has maximal chains of different lengths");
  }
}

}  // namespace

IncidenceFunction::IncidenceFunction(const Poset& host)
    : host_(std::make_shared<const Poset>(host)) {}

IncidenceFunction IncidenceFunction::delta(const Poset& host) {
  IncidenceFunction out(host);
  for (int t = 0; t < host.size(); ++t) out.set(t, t, Polynomial::one());
  return out;
}

IncidenceFunction IncidenceFunction::zeta(const Poset& host) {
  IncidenceFunction out(host);
  for (int s = 0; s < out.host().size(); ++s)
    for (int t : out.host().filter(s)) out.set(s, t, Polynomial::one());
  return out;
}

const Polynomial& IncidenceFunction::at(int s, int t) const {
  if (!host_->less_equal(s, t))
    throw std::invalid_argument("not-comparable: [" + host_->id_of(s) + ", " +
                                host_->id_of(t) + "] is not an interval");
  const auto it = values_.find({s, t});
  return it == values_.end() ? kZero : it->second;
}

void IncidenceFunction::set(int s, int t, Polynomial value) {
  if (!host_->less_equal(s, t))
    throw std::invalid_argument("not-comparable: [" + host_->id_of(s) + ", " +
                                host_->id_of(t) + "] is not an interval");
  if (value.is_zero())
    values_.erase({s, t});
  else
    values_[{s, t}] = std::move(value);
}

bool IncidenceFunction::is_unitary() const {
  for (int t = 0; t < host_->size(); ++t)
    if (!(at(t, t) == Polynomial::one())) return false;
  return true;
}

bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
  return same_host(a.host(), b.host()) && a.values_ == b.values_;
}

PointFunction::PointFunction(const Poset& host)
    : host_(std::make_shared<const Poset>(host)),
      values_(static_cast<size_t>(host.size())) {}

PointFunction PointFunction::constant(const Poset& host, Polynomial value) {
  PointFunction out(host);
  for (auto& v : out.values_) v = value;
  return out;
}

const Polynomial& PointFunction::at(int t) const {
  return values_.at(static_cast<size_t>(t));
}

void PointFunction::set(int t, Polynomial value) {
  values_.at(static_cast<size_t>(t)) = std::move(value);
}

bool operator==(const PointFunction& a, const PointFunction& b) {
  return same_host(a.host(), b.host()) && a.values_ == b.values_;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same_host(f.host(), g.host(), "convolve");
  const Poset& p = f.host();
  IncidenceFunction out(p);
  for (int s = 0; s < p.size(); ++s) {
    for (int u : p.filter(s)) {
      Polynomial acc;
      for (int t : p.interval(s, u)) acc = acc + f.at(s, t) * g.at(t, u);
      out.set(s, u, std::move(acc));
    }
  }
  return out;
}

PointFunction convolve(const PointFunction& f, const IncidenceFunction& g) {
  require_same_host(f.host(), g.host(), "convolve");
  const Poset& p = f.host();
  PointFunction out(p);
  for (int t = 0; t < p.size(); ++t) {
    Polynomial acc;
    for (int s : p.ideal(t)) acc = acc + f.at(s) * g.at(s, t);
    out.set(t, std::move(acc));
  }
  return out;
}

IncidenceFunction invert(const IncidenceFunction& g) {
  if (!g.is_unitary())
    throw std::invalid_argument(
        "not-unitary: only incidence functions with unit diagonal are invertible");
  const Poset& p = g.host();
  IncidenceFunction out(p);
  for (int s = 0; s < p.size(); ++s) {
    // Process intervals [s, u] in order of size, so every proper subinterval
    // [s, t] is already inverted when u is reached.
    std::vector<std::pair<size_t, int>> order;
    for (int u : p.filter(s)) order.emplace_back(p.interval(s, u).size(), u);
    std::sort(order.begin(), order.end());
    for (const auto& [size, u] : order) {
      if (u == s) {
        out.set(s, s, Polynomial::one());
        continue;
      }
      Polynomial acc;
      for (int t : p.interval(s, u))
        if (t != u) acc = acc + out.at(s, t) * g.at(t, u);
      out.set(s, u, -acc);
    }
  }
  return out;
}

IncidenceFunction bar(const IncidenceFunction& g) {
  const Poset& p = g.host();
  IncidenceFunction out(p);
  for (int s = 0; s < p.size(); ++s) {
    for (int t : p.filter(s)) {
      const int rho = p.interval_rank(s, t);
      const Polynomial& v = g.at(s, t);
      if (auto deg = v.degree(); deg && *deg > rho)
        throw std::domain_error("degree-exceeds-rank: the value on [" + p.id_of(s) + ", " +
                                p.id_of(t) + "] has degree above the interval rank " +
                                std::to_string(rho));
      out.set(s, t, reflect(v, rho));
    }
  }
  return out;
}

PointFunction bar(const PointFunction& f) {
  const Poset& p = f.host();
  PointFunction out(p);
  for (int t = 0; t < p.size(); ++t) {
    const int rho = p.rank(t);
    const Polynomial& v = f.at(t);
    if (auto deg = v.degree(); deg && *deg > rho)
      throw std::domain_error("degree-exceeds-rank: the value at '" + p.id_of(t) +
                              "' has degree above the element rank " + std::to_string(rho));
    out.set(t, reflect(v, rho));
  }
  return out;
}

IncidenceFunction lambda_kernel(const Poset& p) {
  IncidenceFunction out(p);
  const Polynomial x_minus_1 = Polynomial::of({-1, 1});
  for (int s = 0; s < p.size(); ++s)
    for (int t : p.filter(s))
      out.set(s, t, power(x_minus_1, graded_interval_rank(p, s, t, "not-locally-graded")));
  return out;
}

bool is_kernel(const IncidenceFunction& kappa) {
  if (!kappa.is_unitary()) return false;
  try {
    return convolve(kappa, bar(kappa)) == IncidenceFunction::delta(kappa.host());
  } catch (const std::domain_error&) {
    // Degree or grading requirements already fail, so the test cannot pass.
    return false;
  }
}

PointFunction gamma(const Poset& p, const IncidenceFunction& kappa) {
  require_same_host(p, kappa.host(), "gamma");
  if (!p.is_lower_graded())
    throw std::domain_error("inconsistency: gamma needs a lower graded poset");
  if (!kappa.is_unitary())
    throw std::domain_error("inconsistency: gamma needs a unitary incidence function");
  const int n = p.size();
  std::vector<int> rank(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) rank[static_cast<size_t>(t)] = p.rank(t);
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)];
  });
  PointFunction out(p);
  for (int t : order) {
    if (p.lower_covers(t).empty()) {
      out.set(t, Polynomial::one());
      continue;
    }
    Polynomial r;
    for (int s : p.ideal(t))
      if (s != t) r = r + out.at(s) * kappa.at(s, t);
    const int rho = rank[static_cast<size_t>(t)];
    // The degree bound pins the solution to the mirrored low part of r; the
    // rest of the equation must then hold on its own.
    Polynomial g = -low_part(r, (rho - 1) / 2);
    if (r + g != reflect(g, rho))
      throw std::domain_error("inconsistency: the degree-reversal equation has no solution at '" +
                              p.id_of(t) + "'; the incidence function is not a kernel");
    out.set(t, std::move(g));
  }
  return out;
}

IncidenceFunction xi(const Poset& p, const IncidenceFunction& kappa) {
  require_same_host(p, kappa.host(), "xi");
  if (!kappa.is_unitary())
    throw std::domain_error("inconsistency: xi needs a unitary incidence function");
  IncidenceFunction out(p);
  for (int s = 0; s < p.size(); ++s) {
    std::vector<std::pair<int, int>> order;  // (interval rank, element)
    for (int t : p.filter(s))
      order.emplace_back(graded_interval_rank(p, s, t, "inconsistency"), t);
    std::sort(order.begin(), order.end());
    for (const auto& [rho, t] : order) {
      if (t == s) {
        out.set(s, s, Polynomial::one());
        continue;
      }
      Polynomial r;
      for (int m : p.interval(s, t))
        if (m != t) r = r + out.at(s, m) * kappa.at(m, t);
      Polynomial g = -low_part(r, (rho - 1) / 2);
      if (r + g != reflect(g, rho))
        throw std::domain_error("inconsistency: the degree-reversal equation has no solution on [" +
                                p.id_of(s) + ", " + p.id_of(t) +
                                "]; the incidence function is not a kernel");
      out.set(s, t, std::move(g));
    }
  }
  return out;
}

HVector h_general(const Poset& p) {
  if (p.size() == 0)
    throw std::invalid_argument("empty-poset: the h-polynomial needs a nonempty poset");
  if (!p.is_lower_graded() || !p.is_locally_eulerian())
    throw std::domain_error(
        "not-locally-eulerian: the h-polynomial needs a lower graded, locally Eulerian poset");
  const PointFunction g = gamma(p, lambda_kernel(p));
  const int d = p.length();
  const Polynomial x_minus_1 = Polynomial::of({-1, 1});
  Polynomial reversed;
  for (int t = 0; t < p.size(); ++t)
    reversed = reversed + g.at(t) * power(x_minus_1, d - p.rank(t));
  return HVector{reflect(reversed, d), d};
}

FormalSubdivision::FormalSubdivision(Poset source, Poset target,
                                     std::vector<int> sigma_by_index)
    : source_(std::make_shared<const Poset>(std::move(source))),
      target_(std::make_shared<const Poset>(std::move(target))),
      sigma_(std::move(sigma_by_index)) {
  if (static_cast<int>(sigma_.size()) != source_->size())
    throw std::invalid_argument("sigma-size: expected one image per source element");
  for (int v : sigma_)
    if (v < 0 || v >= target_->size())
      throw std::invalid_argument("unknown-element: sigma image index out of range");
}

FormalSubdivision::FormalSubdivision(Poset source, Poset target,
                                     const std::map<std::string, std::string>& sigma_by_id)
    : source_(std::make_shared<const Poset>(std::move(source))),
      target_(std::make_shared<const Poset>(std::move(target))) {
  std::vector<int> sig(static_cast<size_t>(source_->size()), -1);
  for (const auto& [from, to] : sigma_by_id)
    sig[static_cast<size_t>(source_->index_of(from))] = target_->index_of(to);
  for (int q = 0; q < source_->size(); ++q)
    if (sig[static_cast<size_t>(q)] < 0)
      throw std::invalid_argument("sigma-missing: no image for source element '" +
                                  source_->id_of(q) + "'");
  sigma_ = std::move(sig);
}

std::vector<int> FormalSubdivision::restriction_ideal(int u) const {
  std::vector<int> out;
  for (int q = 0; q < source_->size(); ++q)
    if (target_->less_equal(sigma_[static_cast<size_t>(q)], u)) out.push_back(q);
  return out;
}

std::vector<int> FormalSubdivision::preimage(int u) const {
  std::vector<int> out;
  for (int q = 0; q < source_->size(); ++q)
    if (sigma_[static_cast<size_t>(q)] == u) out.push_back(q);
  return out;
}

ValidationReport validate_formal(const FormalSubdivision& f) {
  ValidationReport report;
  const Poset& q = f.source();
  const Poset& p = f.target();
  const auto issue = [&](std::string check, std::string location, std::string detail) {
    report.issues.push_back({std::move(check), std::move(location), std::move(detail)});
  };
  report.notes.push_back(
      "poset-level conditions only; topological regularity of any underlying "
      "spaces is assumed, not verified");
  if (q.size() == 0 || p.size() == 0) {
    issue("empty-poset", "", "both posets must be nonempty");
    return report;
  }
  for (int u = 0; u < p.size(); ++u)
    if (f.preimage(u).empty()) issue("not-surjective", p.id_of(u), "no source element maps here");

  bool graded_ok = true;
  if (!q.is_lower_graded()) {
    issue("source-not-lower-graded", "", "some principal ideal of the source is not graded");
    graded_ok = false;
  }
  if (!p.is_lower_graded()) {
    issue("target-not-lower-graded", "", "some principal ideal of the target is not graded");
    graded_ok = false;
  }
  if (!q.is_locally_eulerian())
    issue("source-not-locally-eulerian", "",
          "some interval of the source has the wrong Moebius value");
  if (!p.is_locally_eulerian())
    issue("target-not-locally-eulerian", "",
          "some interval of the target has the wrong Moebius value");
  if (!graded_ok) return report;  // ranks below would be undefined

  std::vector<int> qrank(static_cast<size_t>(q.size())), prank(static_cast<size_t>(p.size()));
  for (int t = 0; t < q.size(); ++t) qrank[static_cast<size_t>(t)] = q.rank(t);
  for (int u = 0; u < p.size(); ++u) prank[static_cast<size_t>(u)] = p.rank(u);

  for (int t = 0; t < q.size(); ++t) {
    const int ru = prank[static_cast<size_t>(f.sigma(t))];
    if (qrank[static_cast<size_t>(t)] > ru)
      issue("rank-inequality", q.id_of(t),
            "source rank " + std::to_string(qrank[static_cast<size_t>(t)]) +
                " exceeds the rank " + std::to_string(ru) + " of its image");
  }

  std::vector<char> u_ok(static_cast<size_t>(p.size()), 1);
  for (int u = 0; u < p.size(); ++u) {
    const auto qu = f.restriction_ideal(u);
    if (qu.empty()) {
      u_ok[static_cast<size_t>(u)] = 0;  // covered by not-surjective above
      continue;
    }
    std::vector<char> member(static_cast<size_t>(q.size()), 0);
    for (int t : qu) member[static_cast<size_t>(t)] = 1;
    bool ideal = true;
    for (int t : qu)
      for (int s : q.lower_covers(t))
        if (!member[static_cast<size_t>(s)]) ideal = false;
    if (!ideal) {
      issue("restriction-not-ideal", p.id_of(u),
            "the preimage of the principal ideal is not downward closed");
      u_ok[static_cast<size_t>(u)] = 0;
      continue;
    }
    int length = 0;
    for (int t : qu) length = std::max(length, qrank[static_cast<size_t>(t)]);
    if (length != prank[static_cast<size_t>(u)]) {
      issue("restriction-length", p.id_of(u),
            "restriction length " + std::to_string(length) + " differs from the rank " +
                std::to_string(prank[static_cast<size_t>(u)]));
      u_ok[static_cast<size_t>(u)] = 0;
    }
  }

  bool have_gamma = false;
  PointFunction g(q);
  try {
    g = gamma(q, lambda_kernel(q));
    have_gamma = true;
  } catch (const std::exception& e) {
    issue("gamma-failed", "", e.what());
  }
  if (have_gamma) {
    const Polynomial x_minus_1 = Polynomial::of({-1, 1});
    for (int u = 0; u < p.size(); ++u) {
      if (!u_ok[static_cast<size_t>(u)]) continue;
      const int ru = prank[static_cast<size_t>(u)];
      bool exponents_ok = true;
      Polynomial whole, interior;
      for (int t : f.restriction_ideal(u)) {
        const int e = ru - qrank[static_cast<size_t>(t)];
        if (e < 0) {
          exponents_ok = false;  // rank-inequality already recorded
          break;
        }
        const Polynomial term = g.at(t) * power(x_minus_1, e);
        whole = whole + term;
        if (f.sigma(t) == u) interior = interior + term;
      }
      if (!exponents_ok) continue;
      if (auto deg = interior.degree(); deg && *deg > ru) {
        issue("restriction-reciprocity", p.id_of(u),
              "the interior sum has degree above the rank " + std::to_string(ru));
        continue;
      }
      if (whole != reflect(interior, ru))
        issue("restriction-reciprocity", p.id_of(u),
              "the degree-reversed restriction h-polynomial differs from the interior sum");
    }
  }
  return report;
}

FormalSubdivision restriction(const FormalSubdivision& f, int u) {
  const Poset& q = f.source();
  const Poset& p = f.target();
  const auto qs = f.restriction_ideal(u);
  const auto ts = p.ideal(u);
  std::vector<int> position(static_cast<size_t>(p.size()), -1);
  for (int j = 0; j < static_cast<int>(ts.size()); ++j)
    position[static_cast<size_t>(ts[static_cast<size_t>(j)])] = j;
  std::vector<int> sig;
  sig.reserve(qs.size());
  for (int t : qs) sig.push_back(position[static_cast<size_t>(f.sigma(t))]);
  return FormalSubdivision(q.induced(qs), p.principal_ideal(u), std::move(sig));
}

PointFunction restriction_h(const FormalSubdivision& f) {
  const Poset& q = f.source();
  const Poset& p = f.target();
  const PointFunction g = gamma(q, lambda_kernel(q));
  const Polynomial x_minus_1 = Polynomial::of({-1, 1});
  PointFunction out(p);
  for (int u = 0; u < p.size(); ++u) {
    const int ru = p.rank(u);
    Polynomial sum;
    for (int t : f.restriction_ideal(u)) sum = sum + g.at(t) * power(x_minus_1, ru - q.rank(t));
    out.set(u, reflect(sum, ru));
  }
  return out;
}

Polynomial local_h_general(const FormalSubdivision& f) {
  const Poset& p = f.target();
  const auto top = p.maximum();
  if (!top)
    throw std::domain_error(
        "no-maximum: the local h-polynomial needs a target with a maximum element");
  const PointFunction h = restriction_h(f);
  const IncidenceFunction xi_inverse = invert(xi(p, lambda_kernel(p)));
  Polynomial ell;
  for (int u = 0; u < p.size(); ++u) ell = ell + h.at(u) * xi_inverse.at(u, *top);
  const int d = p.rank(*top);
  if (!is_palindromic(ell, d))
    throw std::logic_error("identity-violated: the local h-polynomial " + ell.to_string() +
                           " of a formal subdivision must be symmetric in degree " +
                           std::to_string(d));
  return ell;
}

bool is_acceptable(const PointFunction& f, const IncidenceFunction& kappa) {
  require_same_host(f.host(), kappa.host(), "acceptability");
  const Poset& p = f.host();
  for (int t = 0; t < p.size(); ++t) {
    const int rho = p.rank(t);
    const Polynomial& v = f.at(t);
    if (auto deg = v.degree(); deg && *deg > rho) return false;
    Polynomial sum;
    for (int s : p.ideal(t)) sum = sum + f.at(s) * kappa.at(s, t);
    if (sum != reflect(v, rho)) return false;
  }
  return true;
}

bool acceptability_check(const FormalSubdivision& f) {
  return is_acceptable(restriction_h(f), lambda_kernel(f.target()));
}

std::pair<Polynomial, Polynomial> general_locality(const FormalSubdivision& f) {
  const Poset& p = f.target();
  if (!p.is_graded())
    throw std::domain_error("not-graded: the locality decomposition needs a graded target");
  Polynomial lhs = h_general(f.source()).poly;
  Polynomial rhs;
  for (int u = 0; u < p.size(); ++u)
    rhs = rhs + local_h_general(restriction(f, u)) * h_general(p.subposet_above(u)).poly;
  return {std::move(lhs), std::move(rhs)};
}

FormalSubdivision lift_to_formal(const SubdivisionMap& sigma, int min_dim) {
  const FaceComplex& src = sigma.source();
  const FaceComplex& tgt = sigma.target();
  Poset q = min_dim == 0 ? src.nonempty_face_poset() : src.truncated_face_poset(min_dim);
  Poset p = min_dim == 0 ? tgt.nonempty_face_poset() : tgt.truncated_face_poset(min_dim);
  if (q.size() == 0 || p.size() == 0)
    throw std::invalid_argument("parameter-out-of-range: no face has dimension at least " +
                                std::to_string(min_dim));
  std::vector<int> sig(static_cast<size_t>(q.size()));
  for (int i = 0; i < q.size(); ++i) {
    const int face = src.index_of(q.id_of(i));
    sig[static_cast<size_t>(i)] = p.index_of(tgt.id_of(sigma.carrier(face)));
  }
  return FormalSubdivision(std::move(q), std::move(p), std::move(sig));
}

}  // namespace cubal
