#pragma once

// The order unit space A = X (+) R built over a smooth strictly convex normed
// space X. Positive cone: 0 <= x (+) s iff ||x|| <= s; order unit 1 = 0 (+) 1.
// Its quantum logic ext[0, 1] consists of 0, 1 and the atoms (u (+) 1)/2 with
// ||u|| = 1. States come from dual functionals of norm <= 1, and the
// transition probability between atoms is P(f|e) = (rho_x(y) + 1)/2.

#include <cstddef>
#include <functional>
#include <vector>

#include "genspin/coords.hpp"
#include "genspin/linalg_space.hpp"

namespace genspin {

// x (+) s
struct OUElement {
  Vector x;
  double s = 0.0;

  static OUElement zero(std::size_t dim) { return {Vector::zeros(dim), 0.0}; }
  static OUElement unit(std::size_t dim) { return {Vector::zeros(dim), 1.0}; }

  friend OUElement operator+(const OUElement& a, const OUElement& b) {
    return {a.x + b.x, a.s + b.s};
  }
  friend OUElement operator-(const OUElement& a, const OUElement& b) {
    return {a.x - b.x, a.s - b.s};
  }
  friend OUElement operator*(double t, const OUElement& a) { return {t * a.x, t * a.s}; }
};

enum class LogicTag { Zero, One, Atom };

// Member of the logic L_X: Zero, One, or the atom (u (+) 1)/2 with ||u|| = 1.
class LogicElement {
 public:
  static LogicElement zero(std::size_t dim) { return LogicElement(LogicTag::Zero, Vector::zeros(dim)); }
  static LogicElement one(std::size_t dim) { return LogicElement(LogicTag::One, Vector::zeros(dim)); }

  LogicTag tag() const noexcept { return tag_; }
  bool is_atom() const noexcept { return tag_ == LogicTag::Atom; }
  // Unit direction of an atom; the zero vector for Zero and One.
  const Vector& direction() const noexcept { return u_; }
  std::size_t dim() const noexcept { return u_.dim(); }

 private:
  friend class SpinFactor;
  LogicElement(LogicTag tag, Vector u) : tag_(tag), u_(std::move(u)) {}

  LogicTag tag_;
  Vector u_;
};

// Atom constructors: Strict rejects inputs whose norm is off 1 by more than
// the atom tolerance; Lenient rescales any nonzero vector.
enum class AtomPolicy { Strict, Lenient };

struct State {
  DualFunctional rho;
};

// lambda_plus e + lambda_minus e' with e = atom, e' its orthocomplement.
struct SpectralForm {
  LogicElement atom;
  double lambda_plus;
  double lambda_minus;
  // x = 0: the element is a multiple of the unit and the atom is a
  // conventional choice (first basis direction).
  bool scalar_flag;
};

struct SpinTolerances {
  double positivity = 1e-12;
  double atom_unit = 1e-9;      // strict-mode acceptance of |‖u‖ - 1|
  double logic_equality = 1e-9;  // atoms equal iff ‖u - v‖ <= this
  double extreme = 1e-9;         // membership in ext[0, 1]
  double state_norm = 1e-12;
};

struct DoubleCountReport {
  std::size_t n = 0;  // size of the f family
  std::size_t m = 0;  // size of the e family
  double total_by_f = 0.0;  // sum_k sum_l P(e_l | f_k)
  double total_by_e = 0.0;  // sum_l sum_k P(f_k | e_l)
  double max_symmetry_defect = 0.0;
  bool totals_equal = false;
};

class SpinFactor {
 public:
  explicit SpinFactor(NormModel model, SpinTolerances tol = {});

  const NormModel& model() const noexcept { return model_; }
  std::size_t dim() const noexcept { return model_.dim(); }
  const SpinTolerances& tolerances() const noexcept { return tol_; }

  // ---- order unit space ----
  OUElement unit() const { return OUElement::unit(dim()); }
  double ou_norm(const OUElement& a) const;
  bool is_positive(const OUElement& a) const;
  bool is_extreme_unit_interval(const OUElement& a) const;

  // ---- logic ----
  LogicElement atom(const Vector& u, AtomPolicy policy = AtomPolicy::Strict) const;
  LogicElement zero() const { return LogicElement::zero(dim()); }
  LogicElement one() const { return LogicElement::one(dim()); }
  OUElement element(const LogicElement& e) const;
  bool equal(const LogicElement& e, const LogicElement& f) const;
  LogicElement orthocomplement(const LogicElement& e) const;
  LogicElement lattice_sup(const LogicElement& e, const LogicElement& f) const;
  LogicElement lattice_inf(const LogicElement& e, const LogicElement& f) const;
  bool leq(const LogicElement& e, const LogicElement& f) const;
  bool orthogonal(const LogicElement& e, const LogicElement& f) const;

  // ---- states ----
  State make_state(DualFunctional rho) const;
  State state_of_atom(const LogicElement& e) const;
  State trace_state() const;
  double eval_state(const State& mu, const OUElement& a) const;
  double eval_state_logic(const State& mu, const LogicElement& e) const;

  // ---- transition probabilities ----
  // P(f | e); e must be an atom.
  double transition_probability(const LogicElement& f, const LogicElement& e) const;
  // M[i][j] = P(atoms[j] | atoms[i])
  std::vector<std::vector<double>> tp_matrix(const std::vector<LogicElement>& atoms) const;
  double symmetry_defect(const LogicElement& e, const LogicElement& f) const;
  double eq6_defect(const LogicElement& e, const LogicElement& f) const;
  DoubleCountReport verify_double_count(const std::vector<LogicElement>& family_e,
                               const std::vector<LogicElement>& family_f) const;

  // ---- spectral calculus ----
  SpectralForm spectral_decompose(const OUElement& a) const;
  OUElement reconstruct(const SpectralForm& sf) const;
  OUElement apply_function(const OUElement& a, const std::function<double(double)>& phi) const;
  OUElement power(const OUElement& a, unsigned n) const;
  // a o b = ((a + b)^2 - (a - b)^2) / 4 with squares from the spectral calculus.
  OUElement jordan_product(const OUElement& a, const OUElement& b) const;
  // ou_norm((a + b) o c - a o c - b o c)
  double bilinearity_defect(const OUElement& a, const OUElement& b, const OUElement& c) const;

 private:
  void require_atom(const LogicElement& e, const char* what) const;
  void require_dim(const LogicElement& e) const;

  NormModel model_;
  SpinTolerances tol_;
};

}  // namespace genspin
