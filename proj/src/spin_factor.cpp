#include "genspin/spin_factor.hpp"

#include <algorithm>
#include <cmath>

#include "genspin/errors.hpp"

namespace genspin {

namespace {

double int_power(double base, unsigned n) {
  double result = 1.0;
  for (unsigned k = 0; k < n; ++k) result *= base;
  return result;
}

}  // namespace

SpinFactor::SpinFactor(NormModel model, SpinTolerances tol)
    : model_(std::move(model)), tol_(tol) {}

double SpinFactor::ou_norm(const OUElement& a) const { return norm(model_, a.x) + std::fabs(a.s); }

bool SpinFactor::is_positive(const OUElement& a) const {
  return norm(model_, a.x) <= a.s + tol_.positivity;
}

bool SpinFactor::is_extreme_unit_interval(const OUElement& a) const {
  const double nx = norm(model_, a.x);
  const double t = tol_.extreme;
  if (nx <= t) return std::fabs(a.s) <= t || std::fabs(a.s - 1.0) <= t;
  return std::fabs(a.s - 0.5) <= t && std::fabs(nx - 0.5) <= t;
}

void SpinFactor::require_dim(const LogicElement& e) const { require_same_dim(dim(), e.dim()); }

void SpinFactor::require_atom(const LogicElement& e, const char* what) const {
  require_dim(e);
  if (!e.is_atom()) throw InputError(std::string(what) + " must be an atom");
}

LogicElement SpinFactor::atom(const Vector& u, AtomPolicy policy) const {
  require_same_dim(dim(), u.dim());
  const double n = norm(model_, u);
  if (n == 0.0) throw InputError("an atom needs a nonzero direction");
  if (policy == AtomPolicy::Strict && std::fabs(n - 1.0) > tol_.atom_unit) {
    throw InputError("atom direction is not a unit vector (norm " + short_number(n) + ")");
  }
  return LogicElement(LogicTag::Atom, n == 1.0 ? u : (1.0 / n) * u);
}

OUElement SpinFactor::element(const LogicElement& e) const {
  require_dim(e);
  switch (e.tag()) {
    case LogicTag::Zero:
      return OUElement::zero(dim());
    case LogicTag::One:
      return OUElement::unit(dim());
    case LogicTag::Atom:
      return {0.5 * e.direction(), 0.5};
  }
  return OUElement::zero(dim());
}

bool SpinFactor::equal(const LogicElement& e, const LogicElement& f) const {
  require_dim(e);
  require_dim(f);
  if (e.tag() != f.tag()) return false;
  if (!e.is_atom()) return true;
  return norm(model_, e.direction() - f.direction()) <= tol_.logic_equality;
}

LogicElement SpinFactor::orthocomplement(const LogicElement& e) const {
  require_dim(e);
  switch (e.tag()) {
    case LogicTag::Zero:
      return one();
    case LogicTag::One:
      return zero();
    case LogicTag::Atom:
      return LogicElement(LogicTag::Atom, -e.direction());
  }
  return zero();
}

LogicElement SpinFactor::lattice_sup(const LogicElement& e, const LogicElement& f) const {
  require_dim(e);
  require_dim(f);
  if (e.tag() == LogicTag::Zero) return f;
  if (f.tag() == LogicTag::Zero) return e;
  if (e.tag() == LogicTag::One || f.tag() == LogicTag::One) return one();
  return equal(e, f) ? e : one();
}

LogicElement SpinFactor::lattice_inf(const LogicElement& e, const LogicElement& f) const {
  require_dim(e);
  require_dim(f);
  if (e.tag() == LogicTag::Zero || f.tag() == LogicTag::Zero) return zero();
  if (e.tag() == LogicTag::One) return f;
  if (f.tag() == LogicTag::One) return e;
  return equal(e, f) ? e : zero();
}

bool SpinFactor::leq(const LogicElement& e, const LogicElement& f) const {
  require_dim(e);
  require_dim(f);
  return e.tag() == LogicTag::Zero || f.tag() == LogicTag::One || equal(e, f);
}

bool SpinFactor::orthogonal(const LogicElement& e, const LogicElement& f) const {
  return leq(e, orthocomplement(f));
}

State SpinFactor::make_state(DualFunctional rho) const {
  require_same_dim(dim(), rho.dim());
  const double slack = std::max(tol_.state_norm, model_.duality_tolerance());
  const double dn = dual_norm(model_, rho);
  if (dn > 1.0 + slack) {
    throw InputError("functional has dual norm " + short_number(dn) + " > 1; not a state");
  }
  return State{std::move(rho)};
}

State SpinFactor::state_of_atom(const LogicElement& e) const {
  require_atom(e, "state_of_atom argument");
  return State{norming_functional(model_, e.direction())};
}

State SpinFactor::trace_state() const { return State{DualFunctional::zeros(dim())}; }

double SpinFactor::eval_state(const State& mu, const OUElement& a) const {
  require_same_dim(dim(), a.x.dim());
  return dual_pair(mu.rho, a.x) + a.s;
}

double SpinFactor::eval_state_logic(const State& mu, const LogicElement& e) const {
  require_dim(e);
  switch (e.tag()) {
    case LogicTag::Zero:
      return 0.0;
    case LogicTag::One:
      return 1.0;
    case LogicTag::Atom:
      return 0.5 * (dual_pair(mu.rho, e.direction()) + 1.0);
  }
  return 0.0;
}

double SpinFactor::transition_probability(const LogicElement& f, const LogicElement& e) const {
  require_atom(e, "conditioning element");
  return eval_state_logic(state_of_atom(e), f);
}

std::vector<std::vector<double>> SpinFactor::tp_matrix(
    const std::vector<LogicElement>& atoms) const {
  std::vector<State> states;
  states.reserve(atoms.size());
  for (const LogicElement& a : atoms) states.push_back(state_of_atom(a));
  std::vector<std::vector<double>> m(atoms.size(), std::vector<double>(atoms.size()));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      m[i][j] = eval_state_logic(states[i], atoms[j]);
    }
  }
  return m;
}

double SpinFactor::symmetry_defect(const LogicElement& e, const LogicElement& f) const {
  require_atom(e, "symmetry_defect argument");
  require_atom(f, "symmetry_defect argument");
  return std::fabs(transition_probability(f, e) - transition_probability(e, f));
}

double SpinFactor::eq6_defect(const LogicElement& e, const LogicElement& f) const {
  require_atom(e, "eq6_defect argument");
  require_dim(f);
  return std::fabs(transition_probability(f, e) + transition_probability(f, orthocomplement(e)) -
                   1.0);
}

DoubleCountReport SpinFactor::verify_double_count(const std::vector<LogicElement>& family_e,
                                         const std::vector<LogicElement>& family_f) const {
  auto validate = [&](const std::vector<LogicElement>& fam, const char* name) {
    if (fam.empty()) throw InputError(std::string(name) + " is empty");
    OUElement sum = OUElement::zero(dim());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      require_atom(fam[i], name);
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        if (!orthogonal(fam[i], fam[j])) {
          throw InputError(std::string(name) + " is not pairwise orthogonal");
        }
      }
      sum = sum + element(fam[i]);
    }
    if (ou_norm(sum - unit()) > tol_.extreme) {
      throw InputError(std::string(name) + " does not sum to the unit");
    }
  };
  validate(family_e, "family_e");
  validate(family_f, "family_f");

  DoubleCountReport rep;
  rep.m = family_e.size();
  rep.n = family_f.size();
  for (const LogicElement& f : family_f) {
    for (const LogicElement& e : family_e) {
      const double e_given_f = transition_probability(e, f);
      const double f_given_e = transition_probability(f, e);
      rep.total_by_f += e_given_f;
      rep.total_by_e += f_given_e;
      rep.max_symmetry_defect = std::max(rep.max_symmetry_defect, std::fabs(e_given_f - f_given_e));
    }
  }
  rep.totals_equal = std::fabs(rep.total_by_f - rep.total_by_e) <= 1e-9;
  return rep;
}

SpectralForm SpinFactor::spectral_decompose(const OUElement& a) const {
  require_same_dim(dim(), a.x.dim());
  if (a.x.is_zero()) {
    const Vector e1 = Vector::basis(dim(), 0);
    return {atom(e1, AtomPolicy::Lenient), a.s, a.s, true};
  }
  const double n = norm(model_, a.x);
  return {LogicElement(LogicTag::Atom, (1.0 / n) * a.x), a.s + n, a.s - n, false};
}

OUElement SpinFactor::reconstruct(const SpectralForm& sf) const {
  require_dim(sf.atom);
  return {(0.5 * (sf.lambda_plus - sf.lambda_minus)) * sf.atom.direction(),
          0.5 * (sf.lambda_plus + sf.lambda_minus)};
}

OUElement SpinFactor::apply_function(const OUElement& a,
                                     const std::function<double(double)>& phi) const {
  SpectralForm sf = spectral_decompose(a);
  sf.lambda_plus = phi(sf.lambda_plus);
  sf.lambda_minus = phi(sf.lambda_minus);
  return reconstruct(sf);
}

OUElement SpinFactor::power(const OUElement& a, unsigned n) const {
  return apply_function(a, [n](double v) { return int_power(v, n); });
}

OUElement SpinFactor::jordan_product(const OUElement& a, const OUElement& b) const {
  return 0.25 * (power(a + b, 2) - power(a - b, 2));
}

double SpinFactor::bilinearity_defect(const OUElement& a, const OUElement& b,
                                      const OUElement& c) const {
  return ou_norm(jordan_product(a + b, c) - jordan_product(a, c) - jordan_product(b, c));
}

}  // namespace genspin
