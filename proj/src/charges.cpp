#include "orlicz_kit/charges.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orlicz {

namespace {

void require_same_points(const Charge& a, const Charge& b) {
  if (a.masses.size() != b.masses.size() || a.carrier.kind() != b.carrier.kind()) {
    throw std::invalid_argument("charges live on different carriers");
  }
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

Charge Charge::on(const Carrier& c, std::vector<double> masses, double lambda) {
  if (masses.size() != c.size()) {
    throw std::invalid_argument("charge has " + std::to_string(masses.size()) + " masses for " +
                                std::to_string(c.size()) + " points");
  }
  for (double m : masses) require_finite(m, "point mass");
  require_finite(lambda, "charge at infinity");
  if (!c.is_tail() && lambda != 0.0) {
    throw std::invalid_argument("charge at infinity needs a tail carrier");
  }
  return Charge{c, std::move(masses), lambda};
}

Charge Charge::zero(const Carrier& c) { return on(c, std::vector<double>(c.size(), 0.0)); }

double Charge::operator()(const MSet& a) const {
  double v = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (a.contains(i)) v += masses[i];
  }
  if (carrier.is_tail() && a.is_cofinite()) v += lambda;
  return v;
}

double Charge::norm() const {
  double v = 0.0;
  for (double m : masses) v += std::abs(m);
  return v + std::abs(lambda);
}

Charge Charge::restricted(const MSet& b) const {
  Charge out = *this;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!b.contains(i)) out.masses[i] = 0.0;
  }
  if (!b.is_cofinite()) out.lambda = 0.0;
  return out;
}

bool Charge::nonnegative() const {
  for (double m : masses) {
    if (m < 0.0) return false;
  }
  return lambda >= 0.0;
}

Charge operator+(const Charge& a, const Charge& b) {
  require_same_points(a, b);
  Charge out = a;
  for (std::size_t i = 0; i < out.masses.size(); ++i) out.masses[i] += b.masses[i];
  out.lambda += b.lambda;
  return out;
}

Charge operator-(const Charge& a, const Charge& b) {
  require_same_points(a, b);
  Charge out = a;
  for (std::size_t i = 0; i < out.masses.size(); ++i) out.masses[i] -= b.masses[i];
  out.lambda -= b.lambda;
  return out;
}

JordanParts jordan(const Charge& nu) {
  JordanParts out{nu, nu, 0.0};
  for (std::size_t i = 0; i < nu.masses.size(); ++i) {
    out.positive.masses[i] = std::max(nu.masses[i], 0.0);
    out.negative.masses[i] = std::max(-nu.masses[i], 0.0);
  }
  out.positive.lambda = std::max(nu.lambda, 0.0);
  out.negative.lambda = std::max(-nu.lambda, 0.0);
  out.total_variation = nu.norm();
  return out;
}

HewittYosidaParts hewitt_yosida(const Charge& nu) {
  if (!nu.carrier.is_tail()) {
    throw std::invalid_argument("Hewitt-Yosida needs a tail carrier; on finite points the pfa part is 0");
  }
  HewittYosidaParts out{nu, Charge::zero(nu.carrier)};
  out.sigma_additive.lambda = 0.0;
  out.purely_finitely_additive.lambda = nu.lambda;
  return out;
}

GiorgiParts de_giorgi(const Charge& nu, const Carrier& mu) {
  if (mu.is_tail() || nu.carrier.is_tail()) throw std::invalid_argument("de Giorgi needs FinitePoints carriers");
  if (nu.masses.size() != mu.size()) throw std::invalid_argument("nu and mu have different point sets");
  if (!nu.nonnegative()) throw std::invalid_argument("de Giorgi fast path needs nu >= 0; use de_giorgi_signed");
  const Charge zero = Charge::zero(nu.carrier);
  GiorgiParts out{zero, zero, zero, std::vector<std::optional<double>>(mu.size()), mu};
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const ExtReal w = mu.weight(i);
    if (w == 0.0) {
      out.singular.masses[i] = nu.masses[i];
    } else if (w.is_pos_inf()) {
      out.diffuse.masses[i] = nu.masses[i];
    } else {
      out.absolutely_continuous.masses[i] = nu.masses[i];
      out.density[i] = nu.masses[i] / w.value();
    }
  }
  return out;
}

GiorgiParts de_giorgi_signed(const Charge& nu, const Carrier& mu) {
  const JordanParts j = jordan(nu);
  GiorgiParts p = de_giorgi(j.positive, mu);
  const GiorgiParts n = de_giorgi(j.negative, mu);
  p.absolutely_continuous = p.absolutely_continuous - n.absolutely_continuous;
  p.diffuse = p.diffuse - n.diffuse;
  p.singular = p.singular - n.singular;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (p.density[i] && n.density[i]) p.density[i] = *p.density[i] - *n.density[i];
  }
  return p;
}

MSet sigma_finite_support(const GiorgiParts& parts) {
  std::vector<std::size_t> ids;
  const auto& a = parts.absolutely_continuous.masses;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const ExtReal w = parts.reference.weight(i);
    if (a[i] != 0.0 && w > 0.0 && w.is_finite()) ids.push_back(i);
  }
  return MSet::of(std::move(ids));
}

bool is_absolutely_continuous(const Charge& c, const Carrier& mu) {
  for (std::size_t i = 0; i < c.masses.size(); ++i) {
    const ExtReal w = mu.weight(i);
    if (c.masses[i] != 0.0 && (w == 0.0 || w.is_pos_inf())) return false;
  }
  return c.lambda == 0.0;
}

bool is_diffuse(const Charge& c, const Carrier& mu) {
  for (std::size_t i = 0; i < c.masses.size(); ++i) {
    if (c.masses[i] != 0.0 && !mu.weight(i).is_pos_inf()) return false;
  }
  return c.lambda == 0.0;
}

bool is_singular(const Charge& c, const Carrier& mu) {
  for (std::size_t i = 0; i < c.masses.size(); ++i) {
    if (c.masses[i] != 0.0 && mu.weight(i) != 0.0) return false;
  }
  return c.lambda == 0.0;
}

}  // namespace orlicz
