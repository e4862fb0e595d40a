#include "cyclewalk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclewalk {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_string(const std::string& s) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::size_t used = 0;
    int v = std::stoi(s.substr(pos, comma - pos), &used);
    if (used != comma - pos) throw std::invalid_argument("Partition: bad part in \"" + s + "\"");
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (int i = 0; i < rows(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void enumerate_rec(int remaining, int maxpart, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, maxpart); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(n, n, cur, out);
  return out;  // n = 0 gives the single empty partition
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(p.part(1), 0);
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 0; j < p.part(i); ++j) ++cols[j];
  return Partition(std::move(cols));
}

Dominance dominance(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominance: partitions of different n");
  bool a_ge = true, b_ge = true;
  long long sa = 0, sb = 0;
  int rows = std::max(a.rows(), b.rows());
  for (int i = 1; i <= rows; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) a_ge = false;
    if (sb < sa) b_ge = false;
  }
  if (a_ge && b_ge) return Dominance::Equal;
  if (a_ge) return Dominance::Dominates;
  if (b_ge) return Dominance::Dominated;
  return Dominance::Incomparable;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  Partition q = conjugate(p);
  std::vector<std::vector<int>> h(p.rows());
  for (int i = 1; i <= p.rows(); ++i) {
    h[i - 1].resize(p.part(i));
    for (int j = 1; j <= p.part(i); ++j)
      h[i - 1][j - 1] = (p.part(i) - j) + (q.part(j) - i) + 1;
  }
  return h;
}

BigInt dimension(const Partition& p) {
  BigInt d = factorial(p.n());
  for (const auto& row : hook_lengths(p))
    for (int h : row) d /= h;
  return d;
}

namespace {

long long syt_rec(const Partition& p, std::vector<int>& filled, int placed) {
  if (placed == p.n()) return 1;
  long long total = 0;
  for (int i = 1; i <= p.rows(); ++i) {
    if (filled[i - 1] == p.part(i)) continue;
    if (i > 1 && filled[i - 1] >= filled[i - 2]) continue;
    ++filled[i - 1];
    total += syt_rec(p, filled, placed + 1);
    --filled[i - 1];
  }
  return total;
}

}  // namespace

long long syt_count_bruteforce(const Partition& p) {
  if (p.n() > 10) throw std::domain_error("syt_count_bruteforce: |p| <= 10 only");
  std::vector<int> filled(p.rows(), 0);
  return syt_rec(p, filled, 0);
}

Partition strip_rows(const Partition& p, int r) {
  if (r < 0) throw std::invalid_argument("strip_rows: negative row count");
  if (r >= p.rows()) return Partition();
  return Partition(std::vector<int>(p.parts().begin() + r, p.parts().end()));
}

std::vector<RimHookRemoval> rim_hook_removals(const Partition& p, int m) {
  if (m < 1) throw std::invalid_argument("rim_hook_removals: hook length must be positive");
  Partition q = conjugate(p);
  std::vector<RimHookRemoval> out;
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.part(i); ++j) {
      int hook = (p.part(i) - j) + (q.part(j) - i) + 1;
      if (hook != m) continue;
      int r = q.part(j);  // lowest row the hook touches
      std::vector<int> parts = p.parts();
      for (int x = i; x < r; ++x) parts[x - 1] = p.part(x + 1) - 1;
      parts[r - 1] = j - 1;
      RimHookRemoval rem;
      rem.residue = Partition(std::move(parts));
      rem.rows_spanned = r - i + 1;
      rem.sign = (rem.rows_spanned - 1) % 2 == 0 ? 1 : -1;
      out.push_back(std::move(rem));
    }
  }
  return out;
}

std::vector<Partition> rim_hook_attachments(const Partition& xi, int m) {
  if (m < 1) throw std::invalid_argument("rim_hook_attachments: hook length must be positive");
  std::vector<Partition> out;
  for (int b = 1; b <= xi.rows() + m; ++b) {
    // at most one top row a can host a hook with lowest cell in row b
    for (int a = std::max(1, b - m + 1); a <= std::min(b, xi.rows() + 1); ++a) {
      int top = m + xi.part(b) + a - b;  // forced length of row a
      if (top < xi.part(a) + 1) continue;
      if (a > 1 && xi.part(a - 1) < top) continue;
      std::vector<int> parts;
      for (int x = 1; x < a; ++x) parts.push_back(xi.part(x));
      parts.push_back(top);
      for (int x = a + 1; x <= b; ++x) parts.push_back(xi.part(x - 1) + 1);
      for (int x = b + 1; x <= xi.rows(); ++x) parts.push_back(xi.part(x));
      out.emplace_back(std::move(parts));
      break;
    }
  }
  return out;
}

}  // namespace cyclewalk
