#include "jring/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                b.parts_.end());
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!entries_.empty()) {
    for (int v : entries_)
      if (v < 0) throw std::invalid_argument("composition entries must be non-negative");
    if (entries_.back() < 1)
      throw std::invalid_argument("last entry of a composition must be at least 1");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i)
    weight_ += static_cast<int>(i + 1) * entries_[i];
}

int Composition::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool Composition::in_zero_set() const {
  switch (entries_.size()) {
    case 0: return true;
    case 1: return entries_[0] == 1;
    default: return entries_[0] == 0;
  }
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.rbegin(), a.entries_.rend(),
                                                b.entries_.rbegin(), b.entries_.rend());
}

namespace {

std::string join(std::span<const int> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

// Fills entries[pos..] so that sum (k+1)*entries[k] == remaining; the last
// entry must be >= 1.
void fill_compositions(std::vector<int>& entries, std::size_t pos, int remaining,
                       std::vector<Composition>& out) {
  const auto length = entries.size();
  const int index = static_cast<int>(pos) + 1;
  if (pos + 1 == length) {
    if (remaining % index == 0 && remaining / index >= 1) {
      entries[pos] = remaining / index;
      out.emplace_back(entries);
    }
    return;
  }
  for (int v = 0; v * index <= remaining; ++v) {
    entries[pos] = v;
    fill_compositions(entries, pos + 1, remaining - v * index, out);
  }
}

void fill_partitions(std::vector<int>& parts, int remaining, int slots, int max_part,
                     std::vector<Partition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(parts);
    return;
  }
  // Each remaining slot needs at least 1.
  for (int v = std::min(max_part, remaining - (slots - 1)); v >= 1; --v) {
    if (v * slots < remaining) break;
    parts.push_back(v);
    fill_partitions(parts, remaining - v, slots - 1, v, out);
    parts.pop_back();
  }
}

}  // namespace

std::string to_string(const Partition& lambda) { return join(lambda.parts()); }

std::string to_string(const Composition& beta) { return join(beta.entries()); }

std::vector<Composition> enumerate_compositions(int n, int length, std::optional<int> first) {
  std::vector<Composition> out;
  if (n < 0 || length < 0 || (first && *first < 0)) return out;
  if (length == 0) {
    if (n == 0 && (!first || *first == 0)) out.push_back(Composition::empty());
    return out;
  }
  if (length == 1) {
    if (first) {
      if (n == *first + 1) out.emplace_back(std::vector<int>{n});
    } else if (n >= 1) {
      out.emplace_back(std::vector<int>{n});
    }
    return out;
  }
  std::vector<int> entries(static_cast<std::size_t>(length), 0);
  if (first) {
    entries[0] = *first;
    fill_compositions(entries, 1, n - *first, out);
  } else {
    fill_compositions(entries, 0, n, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_partitions(int n, int length) {
  std::vector<Partition> out;
  if (n < 0 || length < 0) return out;
  if (length == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> parts;
  fill_partitions(parts, n, length, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for (int l = 0; l <= n; ++l) {
    auto cell = enumerate_partitions(n, l);
    out.insert(out.end(), cell.begin(), cell.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition to_partition(const Composition& beta) {
  std::vector<int> parts;
  for (int j = beta.length(); j >= 1; --j)
    parts.insert(parts.end(), static_cast<std::size_t>(beta[j - 1]), j);
  return Partition(std::move(parts));
}

Composition to_composition(const Partition& lambda) {
  if (lambda.empty()) return Composition::empty();
  std::vector<int> entries(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts()) ++entries[p - 1];
  return Composition(std::move(entries));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> parts(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++parts[j];
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("dominance order compares partitions of equal weight only");
  int a = 0;
  int b = 0;
  const auto n = std::max(lambda.length(), mu.length());
  for (int i = 0; i < n; ++i) {
    a += i < lambda.length() ? lambda[i] : 0;
    b += i < mu.length() ? mu[i] : 0;
    if (a > b) return false;
  }
  return true;
}

Partition extreme_partition(int n, int length) {
  if (length < 1 || n < length) throw std::invalid_argument("extreme partition needs n >= l >= 1");
  std::vector<int> parts(static_cast<std::size_t>(length), 1);
  parts[0] = n - length + 1;
  return Partition(std::move(parts));
}

Partition leading_partition(const Composition& beta) { return conjugate(to_partition(beta)); }

}  // namespace jring
