#include "genspin/pillow.hpp"

#include <numeric>
#include <sstream>

#include "genspin/errors.hpp"

namespace genspin {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
Rational operator/(Rational a, Rational b) { return Rational(a.num_ * b.den_, a.den_ * b.num_); }

std::string_view pillow_name(PillowAtom a) {
  switch (a) {
    case PillowAtom::F1:
      return "f1";
    case PillowAtom::F2:
      return "f2";
    case PillowAtom::F3:
      return "f3";
    case PillowAtom::E:
      return "e";
    case PillowAtom::EPrime:
      return "e'";
  }
  return "?";
}

namespace {
bool is_vertex(PillowAtom a) {
  return a == PillowAtom::F1 || a == PillowAtom::F2 || a == PillowAtom::F3;
}
}  // namespace

PillowAtom pillow_orthocomplement_pole(PillowAtom a) {
  if (a == PillowAtom::E) return PillowAtom::EPrime;
  if (a == PillowAtom::EPrime) return PillowAtom::E;
  throw InputError("vertex atoms have no atomic orthocomplement");
}

bool pillow_orthogonal(PillowAtom a, PillowAtom b) {
  if (a == b) return false;
  if (is_vertex(a) && is_vertex(b)) return true;
  return !is_vertex(a) && !is_vertex(b);
}

Rational pillow_tp(PillowAtom target, PillowAtom source) {
  if (target == source) return 1;
  if (pillow_orthogonal(target, source)) return 0;
  // Pole given vertex: P(e | f_k) = P(e' | f_k) and they add to P(1 | f_k) = 1.
  if (is_vertex(source)) return Rational(1, 2);
  // Vertex given pole: the three vertex values coincide and add to P(1 | e) = 1.
  return Rational(1, 3);
}

PillowReport pillow_report() {
  PillowReport r;
  for (PillowAtom f : kPillowVertices) {
    r.sum_vertices_given_e = r.sum_vertices_given_e + pillow_tp(f, PillowAtom::E);
    r.sum_vertices_given_e_prime = r.sum_vertices_given_e_prime + pillow_tp(f, PillowAtom::EPrime);
    r.sum_e_given_vertices = r.sum_e_given_vertices + pillow_tp(PillowAtom::E, f);
    r.sum_e_prime_given_vertices = r.sum_e_prime_given_vertices + pillow_tp(PillowAtom::EPrime, f);
  }
  r.vertex_eq6_sum = pillow_tp(PillowAtom::F1, PillowAtom::E) + pillow_tp(PillowAtom::F1, PillowAtom::EPrime);
  bool same_for_all = true;
  for (PillowAtom f : kPillowVertices) {
    same_for_all &= pillow_tp(f, PillowAtom::E) + pillow_tp(f, PillowAtom::EPrime) == r.vertex_eq6_sum;
  }
  if (!same_for_all) throw std::logic_error("pillow vertex values are not symmetric");
  r.eq6_defect = (r.vertex_eq6_sum - 1).abs();
  r.eq6_violated = r.eq6_defect != Rational(0);

  for (PillowAtom f : kPillowVertices) {
    for (PillowAtom e : kPillowPoles) {
      r.total_by_vertices = r.total_by_vertices + pillow_tp(e, f);
      r.total_by_poles = r.total_by_poles + pillow_tp(f, e);
    }
  }
  r.symmetric = true;
  for (PillowAtom a : kPillowAtoms) {
    for (PillowAtom b : kPillowAtoms) r.symmetric &= pillow_tp(a, b) == pillow_tp(b, a);
  }
  r.rows_sum_to_one = true;
  for (PillowAtom src : kPillowAtoms) {
    Rational over_vertices;
    Rational over_poles;
    for (PillowAtom f : kPillowVertices) over_vertices = over_vertices + pillow_tp(f, src);
    for (PillowAtom e : kPillowPoles) over_poles = over_poles + pillow_tp(e, src);
    r.rows_sum_to_one &= over_vertices == Rational(1) && over_poles == Rational(1);
  }
  return r;
}

nlohmann::ordered_json PillowReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json tp = nlohmann::ordered_json::object();
  for (PillowAtom t : kPillowAtoms) {
    for (PillowAtom s : kPillowAtoms) {
      tp[std::string("P(") + std::string(pillow_name(t)) + "|" + std::string(pillow_name(s)) + ")"] =
          pillow_tp(t, s).str();
    }
  }
  j["transition_probabilities"] = tp;
  j["sum_k P(f_k|e)"] = sum_vertices_given_e.str();
  j["sum_k P(f_k|e')"] = sum_vertices_given_e_prime.str();
  j["sum_k P(e|f_k)"] = sum_e_given_vertices.str();
  j["sum_k P(e'|f_k)"] = sum_e_prime_given_vertices.str();
  j["P(f_k|e)+P(f_k|e')"] = vertex_eq6_sum.str();
  j["eq6_defect"] = eq6_defect.str();
  j["eq6_violated"] = eq6_violated;
  j["double_count"] = {{"total_by_vertices", total_by_vertices.str()},
                  {"total_by_poles", total_by_poles.str()},
                  {"n", n},
                  {"m", m},
                  {"witness", total_by_vertices.str() + " != " + total_by_poles.str()}};
  j["rows_sum_to_one"] = rows_sum_to_one;
  j["symmetric"] = symmetric;
  j["verdict"] = symmetric ? "symmetric" : "non-symmetric";
  return j;
}

std::string PillowReport::to_text() const {
  std::ostringstream os;
  os << "triangular pillow: atoms f1, f2, f3 (vertices) and e, e' (poles)\n"
     << "  P(f_k|e) = P(f_k|e')           = " << pillow_tp(PillowAtom::F1, PillowAtom::E) << "\n"
     << "  P(e|f_k) = P(e'|f_k)           = " << pillow_tp(PillowAtom::E, PillowAtom::F1) << "\n"
     << "  sum_k P(f_k|e)                 = " << sum_vertices_given_e << "\n"
     << "  sum_k P(e|f_k)                 = " << sum_e_given_vertices << "\n"
     << "  P(f_k|e) + P(f_k|e')           = " << vertex_eq6_sum << "  (defect " << eq6_defect
     << ", identity " << (eq6_violated ? "violated" : "holds") << ")\n"
     << "  double count sum_k sum_l P(e_l|f_k) = " << total_by_vertices
     << ", sum_l sum_k P(f_k|e_l) = " << total_by_poles << "  =>  " << total_by_vertices
     << " != " << total_by_poles << "\n"
     << "  verdict: " << (symmetric ? "symmetric" : "non-symmetric") << "\n";
  return os.str();
}

}  // namespace genspin
