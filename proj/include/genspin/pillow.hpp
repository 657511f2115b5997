#pragma once

// Relational model of the triangular pillow: three pairwise orthogonal
// vertex atoms F1, F2, F3 with F1 + F2 + F3 = 1, and the pole atoms E, E' on
// the curved surface with E + E' = 1. Only the transition probabilities
// among these five atoms are modeled; they are exact rationals.

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

namespace genspin {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  Rational abs() const { return Rational(num_ < 0 ? -num_ : num_, den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class PillowAtom { F1, F2, F3, E, EPrime };

inline constexpr std::array<PillowAtom, 3> kPillowVertices{PillowAtom::F1, PillowAtom::F2,
                                                           PillowAtom::F3};
inline constexpr std::array<PillowAtom, 2> kPillowPoles{PillowAtom::E, PillowAtom::EPrime};
inline constexpr std::array<PillowAtom, 5> kPillowAtoms{PillowAtom::F1, PillowAtom::F2,
                                                        PillowAtom::F3, PillowAtom::E,
                                                        PillowAtom::EPrime};

std::string_view pillow_name(PillowAtom a);
PillowAtom pillow_orthocomplement_pole(PillowAtom a);  // E <-> E'
bool pillow_orthogonal(PillowAtom a, PillowAtom b);

// P(target | source)
Rational pillow_tp(PillowAtom target, PillowAtom source);

struct PillowReport {
  Rational sum_vertices_given_e;          // sum_k P(f_k | e)
  Rational sum_vertices_given_e_prime;    // sum_k P(f_k | e')
  Rational sum_e_given_vertices;          // sum_k P(e | f_k)
  Rational sum_e_prime_given_vertices;    // sum_k P(e' | f_k)
  Rational vertex_eq6_sum;                // P(f_k | e) + P(f_k | e'), same for each k
  Rational eq6_defect;                    // |vertex_eq6_sum - 1|
  bool eq6_violated = false;
  // Double count over the decompositions {E, E'} and {F1, F2, F3}:
  Rational total_by_vertices;  // sum_k sum_l P(e_l | f_k) = n
  Rational total_by_poles;     // sum_l sum_k P(f_k | e_l) = m
  int n = 3;
  int m = 2;
  bool symmetric = false;
  bool rows_sum_to_one = false;  // every row over an orthogonal decomposition of 1

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

PillowReport pillow_report();

}  // namespace genspin
