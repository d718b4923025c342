#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "kyoung/affine_action.hpp"

namespace kyoung {

// Coordinates are in the fundamental-weight basis Λ_1..Λ_k, so the pairing
// with a simple root α_i is the i-th coordinate and the level <φ, x> is the
// coordinate sum. The rank k is the vector length.

using Rational = boost::rational<std::int64_t>;
using Weight = std::vector<std::int64_t>;
using Point = std::vector<Rational>;
/// A root as integer coefficients on α_1..α_k.
using Root = std::vector<int>;

Weight fundamental_weight(int i, int k);  // i = 0 gives the origin
Point to_point(const Weight& w);

template <class T>
T level(const std::vector<T>& x) {
  T s(0);
  for (const T& v : x) s += v;
  return s;
}

/// <root, x> = Σ c_i x_i.
Rational pairing(const Root& root, const Point& x);

/// Invariant form <x, y> on weight coordinates (inverse Cartan matrix).
Rational form(const Point& x, const Point& y);

/// α_i + ... + α_j for 1 <= i <= j <= k; the last entry is φ.
std::vector<Root> positive_roots(int k);

/// s_i for i >= 1 reflects in H_{α_i,0}; s_0 reflects in H_{φ,1}.
template <class T>
std::vector<T> reflect(std::vector<T> x, int i) {
  const int k = static_cast<int>(x.size());
  if (i == 0) {
    const T c = level(x) - T(1);
    if (k == 1) {
      x[0] -= T(2) * c;
    } else {
      x[0] -= c;
      x[k - 1] -= c;
    }
    return x;
  }
  const T c = x[i - 1];
  x[i - 1] -= T(2) * c;
  if (i >= 2) x[i - 2] += c;
  if (i < k) x[i] += c;
  return x;
}

/// Vertex set of w^{-1} A_∅, sorted; word kept for provenance.
struct Alcove {
  std::vector<Weight> vertices;
  Word word;

  friend bool operator==(const Alcove& a, const Alcove& b) { return a.vertices == b.vertices; }
};

Alcove fundamental_alcove(int k);
Alcove alcove_of_word(const Word& w, int k);
Alcove translate(const Alcove& a, const Weight& by);
Point centroid(const Alcove& a);

/// True iff no <α, p> is an integer for α ∈ Φ_0.
bool is_generic(const Point& p);

/// Reduced word w with p strictly inside alcove_of_word(w). Folds p into A_∅
/// crossing the lowest-index violated wall each step. Throws
/// std::domain_error for a point on some hyperplane of the arrangement.
Word alcove_containing(const Point& p);

/// Orbit of Λ_i under the finite Weyl group, sorted.
std::vector<Weight> w0_orbit(int i, int k);

/// Dominant representative of x under W_0.
Weight dominant_representative(Weight x);

/// Word z with alcove_of_word(z) = A_∅ + γ. Throws std::domain_error unless
/// γ lies in W_0 Λ_i for some 1 <= i <= k.
Word pseudo_translation_word(const Weight& gamma);

/// All vertices dominant and of level at most m.
bool in_dilation(const Alcove& a, int m);

/// Rotation of the m-dilated fundamental alcove, 0 -> mΛ_1 -> ... -> mΛ_k -> 0.
Point rotate_sigma(const Point& p, int m);
Weight rotate_sigma(const Weight& x, int m);

/// Dominant weights of the given level, i.e. compositions of `lvl` into k parts.
std::vector<Weight> dominant_weights_at_level(int k, int lvl);

}  // namespace kyoung
