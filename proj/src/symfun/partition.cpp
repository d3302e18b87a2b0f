#include "ospchar/symfun/partition.hpp"

#include <charconv>
#include <functional>
#include <numeric>

#include "ospchar/algebra/errors.hpp"

namespace ospchar {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw PreconditionError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  while (true) {
    auto comma = text.find(',');
    auto piece = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ParseError("invalid partition part '" + std::string(piece) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > part(i)) return false;
  }
  return true;
}

Partition Partition::tail(std::size_t from) const {
  if (from <= 1) return *this;
  if (from > parts_.size()) return {};
  return Partition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(from - 1), parts_.end()));
}

Partition Partition::prepend_rows(int r, std::size_t count) const {
  std::vector<int> p(count, r);
  p.insert(p.end(), parts_.begin(), parts_.end());
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int weight, std::size_t max_length, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_length) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (weight >= 0) rec(weight, max_part);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, std::size_t max_length, int max_part) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of(w, max_length, max_part);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i > lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(cap, lambda.part(i)); p >= 0; --p) {
      cur.push_back(p);
      rec(i + 1, p);
      cur.pop_back();
    }
  };
  rec(1, lambda.part(1));
  return out;
}

}  // namespace ospchar
