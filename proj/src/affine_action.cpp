#include "kyoung/affine_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace kyoung {

namespace {

void check_residue(int i, int k) {
  if (i < 0 || i > k) throw std::domain_error("residue " + std::to_string(i) + " outside 0.." + std::to_string(k));
}

std::vector<int> distinct_residues(const std::vector<Cell>& cells, int k) {
  std::vector<int> out;
  for (Cell c : cells) out.push_back(residue(c, k));
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Core::Core(int k) : k_(k) {
  if (k < 1) throw std::domain_error("k must be at least 1");
}

Core::Core(Partition shape, int k) : shape_(std::move(shape)), k_(k) {
  if (k < 1) throw std::domain_error("k must be at least 1");
  if (!is_core(shape_, k)) throw std::domain_error("(" + shape_.to_string() + ") is not a " + std::to_string(k + 1) + "-core");
}

Core core_of(const Partition& bounded, int k) { return Core(c_map(bounded, k), k, Core::Trusted{}); }

std::vector<Cell> addable_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 0; i <= p.length(); ++i)
    if (i == 0 || p.part(i - 1) > p.part(i)) out.push_back({i, p.part(i)});
  return out;
}

std::vector<Cell> removable_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 0; i < p.length(); ++i)
    if (p.part(i + 1) < p.part(i)) out.push_back({i, p.part(i) - 1});
  return out;
}

std::vector<int> addable_residues(const Core& c) { return distinct_residues(addable_cells(c.shape()), c.k()); }

std::vector<int> removable_residues(const Core& c) { return distinct_residues(removable_cells(c.shape()), c.k()); }

Core apply_s(const Core& c, int i) {
  check_residue(i, c.k());
  std::vector<int> rows(c.shape().parts());
  bool added = false, removed = false;
  for (Cell cell : addable_cells(c.shape())) {
    if (residue(cell, c.k()) != i) continue;
    if (cell.row == static_cast<int>(rows.size())) rows.push_back(0);
    ++rows[cell.row];
    added = true;
  }
  for (Cell cell : removable_cells(c.shape())) {
    if (residue(cell, c.k()) != i) continue;
    if (added) throw std::logic_error("core has addable and removable cells of residue " + std::to_string(i));
    --rows[cell.row];
    removed = true;
  }
  if (removed) std::erase(rows, 0);
  return Core(Partition(std::move(rows)), c.k(), Core::Trusted{});
}

std::optional<Core> apply_u(const Core& c, int i) {
  check_residue(i, c.k());
  std::vector<int> rows(c.shape().parts());
  bool added = false;
  for (Cell cell : addable_cells(c.shape())) {
    if (residue(cell, c.k()) != i) continue;
    if (cell.row == static_cast<int>(rows.size())) rows.push_back(0);
    ++rows[cell.row];
    added = true;
  }
  if (!added) return std::nullopt;
  return Core(Partition(std::move(rows)), c.k(), Core::Trusted{});
}

Word core_to_word(const Core& c) {
  Word w;
  Core cur = c;
  while (!cur.shape().empty()) {
    const int r = removable_residues(cur).front();
    w.push_back(r);
    cur = apply_s(cur, r);
  }
  return w;
}

std::optional<Core> word_to_core(const Word& w, int k) {
  Core cur(k);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto next = apply_u(cur, *it);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

}  // namespace kyoung
