#include "kyoung/alcove.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kyoung {

Weight fundamental_weight(int i, int k) {
  Weight w(k, 0);
  if (i > 0) w[i - 1] = 1;
  return w;
}

Point to_point(const Weight& w) { return Point(w.begin(), w.end()); }

Rational pairing(const Root& root, const Point& x) {
  Rational s(0);
  for (std::size_t i = 0; i < root.size(); ++i) s += Rational(root[i]) * x[i];
  return s;
}

Rational form(const Point& x, const Point& y) {
  const auto k = static_cast<std::int64_t>(x.size());
  Rational s(0);
  for (std::int64_t i = 1; i <= k; ++i)
    for (std::int64_t j = 1; j <= k; ++j)
      s += x[i - 1] * y[j - 1] * Rational(std::min(i, j) * (k + 1 - std::max(i, j)), k + 1);
  return s;
}

std::vector<Root> positive_roots(int k) {
  std::vector<Root> out;
  for (int len = 1; len <= k; ++len)
    for (int i = 0; i + len <= k; ++i) {
      Root r(k, 0);
      std::fill(r.begin() + i, r.begin() + i + len, 1);
      out.push_back(std::move(r));
    }
  return out;
}

Alcove fundamental_alcove(int k) {
  Alcove a;
  for (int i = 0; i <= k; ++i) a.vertices.push_back(fundamental_weight(i, k));
  std::ranges::sort(a.vertices);
  return a;
}

Alcove alcove_of_word(const Word& w, int k) {
  // A_w = w^{-1} A_∅: the leftmost letter is the first reflection applied.
  Alcove a;
  a.word = w;
  for (int v = 0; v <= k; ++v) {
    Weight x = fundamental_weight(v, k);
    for (int letter : w) {
      if (letter < 0 || letter > k) throw std::domain_error("letter outside 0..k");
      x = reflect(std::move(x), letter);
    }
    a.vertices.push_back(std::move(x));
  }
  std::ranges::sort(a.vertices);
  return a;
}

Alcove translate(const Alcove& a, const Weight& by) {
  Alcove out;
  for (Weight v : a.vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += by[i];
    out.vertices.push_back(std::move(v));
  }
  std::ranges::sort(out.vertices);
  return out;
}

Point centroid(const Alcove& a) {
  const std::size_t k = a.vertices.front().size();
  Point c(k, Rational(0));
  for (const Weight& v : a.vertices)
    for (std::size_t i = 0; i < k; ++i) c[i] += v[i];
  for (auto& x : c) x /= static_cast<std::int64_t>(a.vertices.size());
  return c;
}

bool is_generic(const Point& p) {
  const int k = static_cast<int>(p.size());
  for (int i = 0; i < k; ++i) {
    Rational s(0);
    for (int j = i; j < k; ++j) {
      s += p[j];
      if (s.denominator() == 1) return false;
    }
  }
  return true;
}

Word alcove_containing(const Point& p) {
  if (!is_generic(p)) throw std::domain_error("point lies on a hyperplane of the affine arrangement");
  const int k = static_cast<int>(p.size());
  Point q = p;
  Word w;
  for (;;) {
    int wall = -1;
    if (level(q) > Rational(1)) {
      wall = 0;
    } else {
      for (int j = 1; j <= k && wall < 0; ++j)
        if (q[j - 1] < Rational(0)) wall = j;
    }
    if (wall < 0) break;
    q = reflect(std::move(q), wall);
    w.insert(w.begin(), wall);
  }
  return w;
}

std::vector<Weight> w0_orbit(int i, int k) {
  if (i < 1 || i > k) throw std::domain_error("orbit index outside 1..k");
  std::set<Weight> seen{fundamental_weight(i, k)};
  std::vector<Weight> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& x : frontier)
      for (int j = 1; j <= k; ++j) {
        Weight y = reflect(x, j);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Weight dominant_representative(Weight x) {
  const int k = static_cast<int>(x.size());
  for (;;) {
    int j = 1;
    while (j <= k && x[j - 1] >= 0) ++j;
    if (j > k) return x;
    x = reflect(std::move(x), j);
  }
}

Word pseudo_translation_word(const Weight& gamma) {
  const int k = static_cast<int>(gamma.size());
  const Weight dom = dominant_representative(gamma);
  if (level(dom) != 1) throw std::domain_error("direction is not in the W_0-orbit of a fundamental weight");
  Point target = centroid(fundamental_alcove(k));
  for (int i = 0; i < k; ++i) target[i] += gamma[i];
  return alcove_containing(target);
}

bool in_dilation(const Alcove& a, int m) {
  for (const Weight& v : a.vertices) {
    if (std::ranges::any_of(v, [](std::int64_t x) { return x < 0; })) return false;
    if (level(v) > m) return false;
  }
  return true;
}

namespace {

template <class T>
std::vector<T> rotate_impl(const std::vector<T>& x, int m) {
  std::vector<T> y(x.size());
  y[0] = T(m) - level(x);
  for (std::size_t i = 1; i < x.size(); ++i) y[i] = x[i - 1];
  return y;
}

}  // namespace

Point rotate_sigma(const Point& p, int m) { return rotate_impl(p, m); }
Weight rotate_sigma(const Weight& x, int m) { return rotate_impl(x, m); }

std::vector<Weight> dominant_weights_at_level(int k, int lvl) {
  std::vector<Weight> out;
  Weight cur(k, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (lvl >= 0) rec(rec, 0, lvl);
  std::ranges::sort(out);
  return out;
}

}  // namespace kyoung
