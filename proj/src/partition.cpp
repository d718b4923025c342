#include "kyoung/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kyoung {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::cells() const {
  int n = 0;
  for (int r : rows_) n += r;
  return n;
}

bool Partition::is_contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (int i = 0; i < length(); ++i)
    if (rows_[i] > other.rows_[i]) return false;
  return true;
}

Partition Partition::transpose() const {
  std::vector<int> cols(rows_.empty() ? 0 : rows_.front(), 0);
  for (int r : rows_)
    for (int j = 0; j < r; ++j) ++cols[j];
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows_[i]);
  }
  return s;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> rows;
  if (text.empty()) return {};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad partition part '" + item + "'");
    rows.push_back(v);
  }
  return Partition(std::move(rows));
}

int residue(Cell c, int k) {
  const int n = k + 1;
  return ((c.col - c.row) % n + n) % n;
}

namespace {

// Hook lengths of every cell, row-major; conjugate computed once.
template <class F>
void for_each_hook(const Partition& p, F&& f) {
  const Partition t = p.transpose();
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(i); ++j) f(Cell{i, j}, p.part(i) + t.part(j) - i - j - 1);
}

}  // namespace

int hook(const Partition& p, Cell c) {
  if (!p.contains(c)) throw std::domain_error("cell outside the diagram");
  int below = 0;
  for (int i = c.row + 1; i < p.length() && p.part(i) > c.col; ++i) ++below;
  return p.part(c.row) - c.col + below;
}

bool is_core(const Partition& p, int k) {
  bool ok = true;
  for_each_hook(p, [&](Cell, int h) { ok = ok && h != k + 1; });
  return ok;
}

bool has_removable_rim_hook(const Partition& p, int length) {
  // First-column hook lengths form the beta-set; removing a rim hook of the
  // given length moves one bead down by `length` onto a free position.
  const int l = p.length();
  std::set<int> beads;
  for (int i = 0; i < l; ++i) beads.insert(p.part(i) + (l - 1 - i));
  for (int b : beads)
    if (b - length >= 0 && !beads.contains(b - length)) return true;
  return false;
}

int core_size(const Partition& core, int k) {
  int n = 0;
  for_each_hook(core, [&](Cell, int h) { n += h < k + 1; });
  return n;
}

Partition p_map(const Partition& core, int k) {
  std::vector<int> rows(core.length(), 0);
  for_each_hook(core, [&](Cell c, int h) { rows[c.row] += h < k + 1; });
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

Partition c_map(const Partition& bounded, int k) {
  if (!bounded.is_bounded(k)) throw std::domain_error("partition is not " + std::to_string(k) + "-bounded");
  const int l = bounded.length();
  std::vector<int> core(l, 0);
  // Bottom row up: slide each row right by the least shift that keeps the
  // hook of its leftmost retained cell at most k.
  for (int i = l - 1; i >= 0; --i) {
    const int len = bounded.part(i);
    int shift = 0;
    for (;; ++shift) {
      int below = 0;
      for (int r = i + 1; r < l; ++r) below += core[r] > shift;
      if (len + below <= k) break;
    }
    core[i] = len + shift;
  }
  return Partition(std::move(core));
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> rows(a.parts());
  rows.insert(rows.end(), b.parts().begin(), b.parts().end());
  std::ranges::sort(rows, std::greater<>());
  return Partition(std::move(rows));
}

Partition rectangle(int i, int k) {
  if (i < 1 || i > k) throw std::domain_error("rectangle index out of range");
  return Partition(std::vector<int>(k + 1 - i, i));
}

std::vector<Partition> rectangles(int k) {
  std::vector<Partition> out;
  for (int i = 1; i <= k; ++i) out.push_back(rectangle(i, k));
  return out;
}

std::vector<Partition> rectangle_unions(int k, int m) {
  if (k < 1 || m < 1) throw std::domain_error("rectangle_unions needs k, m >= 1");
  // Multisets of size m-1 from {1..k}, as non-decreasing index sequences.
  std::set<Partition> out;
  std::vector<int> idx(m - 1, 1);
  for (;;) {
    Partition u;
    for (int i : idx) u = merge_parts(u, rectangle(i, k));
    out.insert(u);
    int pos = m - 2;
    while (pos >= 0 && idx[pos] == k) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < m - 1; ++j) idx[j] = idx[pos];
  }
  return {out.begin(), out.end()};
}

Partition k_conjugate(const Partition& bounded, int k) {
  return p_map(c_map(bounded, k).transpose(), k);
}

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

}  // namespace kyoung
