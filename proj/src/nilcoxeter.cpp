#include "kyoung/nilcoxeter.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "kyoung/alcove.hpp"

namespace kyoung {

CoreSum::CoreSum(const Core& c, std::int64_t coeff) : k_(c.k()) { add(c.shape(), coeff); }

std::int64_t CoreSum::coefficient(const Partition& core) const {
  auto it = terms_.find(core);
  return it == terms_.end() ? 0 : it->second;
}

void CoreSum::add(const Partition& core, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(core, coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

CoreSum& CoreSum::operator+=(const CoreSum& other) {
  if (other.k_ != k_) throw std::invalid_argument("adding core sums of different k");
  for (const auto& [core, coeff] : other.terms_) add(core, coeff);
  return *this;
}

CoreSum apply_word(const Word& w, const CoreSum& s) {
  CoreSum out(s.k());
  for (const auto& [shape, coeff] : s.terms()) {
    std::optional<Core> cur = Core(shape, s.k());
    for (auto it = w.rbegin(); it != w.rend() && cur; ++it) cur = apply_u(*cur, *it);
    if (cur) out.add(cur->shape(), coeff);
  }
  return out;
}

Word cyclically_decreasing_word(const std::vector<int>& subset, int k) {
  const int n = k + 1;
  std::vector<bool> in(n, false);
  for (int d : subset) {
    if (d < 0 || d > k) throw std::domain_error("residue outside 0..k");
    if (in[d]) throw std::domain_error("repeated residue in subset");
    in[d] = true;
  }
  const auto gap = std::ranges::find(in, false);
  if (gap == in.end()) throw std::domain_error("cyclically decreasing words need a strict subset of 0..k");
  const int start = static_cast<int>(gap - in.begin());

  Word out, run;
  for (int step = 1; step <= n; ++step) {
    const int r = (start + step) % n;
    if (in[r]) {
      run.push_back(r);
    } else {
      out.insert(out.end(), run.rbegin(), run.rend());
      run.clear();
    }
  }
  return out;
}

CoreSum h_op(int i, const CoreSum& s) {
  const int k = s.k();
  if (i < 0 || i > k) throw std::domain_error("h_i needs 0 <= i <= k");
  CoreSum out(k);
  // Size-i subsets of {0..k} in lexicographic order.
  std::vector<int> subset(i);
  for (int j = 0; j < i; ++j) subset[j] = j;
  for (;;) {
    out += apply_word(cyclically_decreasing_word(subset, k), s);
    int pos = i - 1;
    while (pos >= 0 && subset[pos] == k + 1 - i + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int j = pos + 1; j < i; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

namespace {

const std::vector<Word>& translation_words(int i, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Word>> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({i, k});
  if (inserted)
    for (const Weight& gamma : w0_orbit(i, k)) it->second.push_back(pseudo_translation_word(gamma));
  return it->second;
}

}  // namespace

CoreSum rect_schur_op(int i, const CoreSum& s) {
  if (i < 1 || i > s.k()) throw std::domain_error("rectangle index outside 1..k");
  CoreSum out(s.k());
  for (const Word& z : translation_words(i, s.k())) out += apply_word(z, s);
  return out;
}

std::vector<Partition> k_pieri_terms(int i, const Core& c) {
  std::vector<Partition> out;
  const CoreSum sum = h_op(i, CoreSum(c));
  for (const auto& [shape, coeff] : sum.terms()) out.push_back(shape);
  return out;
}

}  // namespace kyoung
