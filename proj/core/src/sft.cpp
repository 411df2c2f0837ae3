#include "hyperdyn/sft.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace hyperdyn {

namespace {

using BoolMat = std::vector<std::uint32_t>;  // row bitmasks

BoolMat bool_mul(const BoolMat& a, const BoolMat& b, int k) {
  BoolMat c(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((a[i] >> j) & 1) c[i] |= b[j];
  return c;
}

/// Powers m^1 .. m^max as boolean reachability matrices.
std::vector<BoolMat> bool_powers(const Sft& m, int max) {
  std::vector<BoolMat> out;
  out.push_back(m.rows);
  for (int e = 2; e <= max; ++e) out.push_back(bool_mul(out.back(), m.rows, m.k));
  return out;
}

bool all_positive(const BoolMat& a, int k) {
  for (int i = 0; i < k; ++i)
    if (a[i] != full_mask(k)) return false;
  return true;
}

std::vector<std::vector<long long>> int_mul(const std::vector<std::vector<long long>>& a,
                                            const std::vector<std::vector<long long>>& b) {
  int k = static_cast<int>(a.size());
  std::vector<std::vector<long long>> c(k, std::vector<long long>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l)
      if (a[i][l])
        for (int j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

std::vector<std::vector<long long>> int_power(const Sft& m, int p) {
  std::vector<std::vector<long long>> base(m.k, std::vector<long long>(m.k, 0));
  for (int i = 0; i < m.k; ++i)
    for (int j = 0; j < m.k; ++j) base[i][j] = m.allowed(i, j) ? 1 : 0;
  auto acc = base;
  for (int e = 2; e <= p; ++e) acc = int_mul(acc, base);
  return acc;
}

/// Removes symbols with an empty row or column until stable. Returns the
/// kept-symbol list; throws if nothing survives.
Sft prune(int k, std::vector<std::uint32_t> rows, std::string name) {
  std::vector<int> keep(k);
  std::iota(keep.begin(), keep.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> next;
    for (int s : keep) {
      bool has_out = false, has_in = false;
      for (int t : keep) {
        if ((rows[s] >> t) & 1) has_out = true;
        if ((rows[t] >> s) & 1) has_in = true;
      }
      if (has_out && has_in)
        next.push_back(s);
      else
        changed = true;
    }
    keep = std::move(next);
  }
  if (keep.empty()) throw std::invalid_argument("sft: empty language (all words forbidden)");
  Sft out;
  out.k = static_cast<int>(keep.size());
  out.name = std::move(name);
  out.rows.assign(out.k, 0);
  for (int i = 0; i < out.k; ++i)
    for (int j = 0; j < out.k; ++j)
      if ((rows[keep[i]] >> keep[j]) & 1) out.rows[i] |= 1u << j;
  return out;
}

}  // namespace

bool Sft::word_allowed(const std::vector<int>& w) const {
  for (int s : w)
    if (s < 0 || s >= k) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!allowed(w[i], w[i + 1])) return false;
  return true;
}

Sft sft_from_matrix(int k, const std::vector<std::vector<int>>& rows, std::string name) {
  if (k <= 0 || k > 30) throw std::invalid_argument("sft_from_matrix: bad alphabet size");
  if (rows.size() != static_cast<size_t>(k))
    throw std::invalid_argument("sft_from_matrix: wrong row count");
  std::vector<std::uint32_t> bits(k, 0);
  for (int i = 0; i < k; ++i) {
    if (rows[i].size() != static_cast<size_t>(k))
      throw std::invalid_argument("sft_from_matrix: wrong row length");
    for (int j = 0; j < k; ++j)
      if (rows[i][j]) bits[i] |= 1u << j;
  }
  return prune(k, std::move(bits), std::move(name));
}

Sft sft_from_forbidden_words(int k, const std::vector<std::string>& words) {
  if (k <= 0 || k > 10) throw std::invalid_argument("sft_from_forbidden_words: bad alphabet size");
  size_t maxlen = 2;
  for (const auto& w : words) {
    if (w.empty()) throw std::invalid_argument("sft_from_forbidden_words: empty forbidden word");
    for (char c : w)
      if (c < '0' || c >= '0' + k)
        throw std::invalid_argument("sft_from_forbidden_words: symbol out of alphabet in '" + w + "'");
    maxlen = std::max(maxlen, w.size());
  }
  auto contains_forbidden = [&](const std::string& s) {
    for (const auto& w : words)
      if (s.find(w) != std::string::npos) return true;
    return false;
  };
  if (maxlen <= 2) {
    std::vector<std::uint32_t> rows(k, full_mask(k));
    for (const auto& w : words) {
      if (w.size() == 1) {
        // A forbidden single symbol kills its row and column.
        int s = w[0] - '0';
        rows[s] = 0;
        for (int i = 0; i < k; ++i) rows[i] &= ~(1u << s);
      } else {
        rows[w[0] - '0'] &= ~(1u << (w[1] - '0'));
      }
    }
    return prune(k, std::move(rows), "sft");
  }
  // Higher-block recoding: new symbols are the allowed (maxlen-1)-blocks,
  // with a transition when the blocks overlap and the combined word is clean.
  int bl = static_cast<int>(maxlen) - 1;
  std::vector<std::string> blocks;
  std::string cur(bl, '0');
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == bl) {
      if (!contains_forbidden(cur)) blocks.push_back(cur);
      return;
    }
    for (int s = 0; s < k; ++s) {
      cur[pos] = static_cast<char>('0' + s);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  if (blocks.size() > 30) throw std::invalid_argument("sft_from_forbidden_words: recoded alphabet too large");
  int nk = static_cast<int>(blocks.size());
  std::vector<std::uint32_t> rows(nk, 0);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) {
      if (blocks[i].substr(1) != blocks[j].substr(0, bl - 1)) continue;
      if (contains_forbidden(blocks[i] + blocks[j].back())) continue;
      rows[i] |= 1u << j;
    }
  return prune(nk, std::move(rows), "sft(higher-block)");
}

bool sft_is_irreducible(const Sft& m) {
  auto reach = [&](bool forward) {
    std::uint32_t seen = 1;
    std::deque<int> q{0};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w = 0; w < m.k; ++w) {
        bool edge = forward ? m.allowed(v, w) : m.allowed(w, v);
        if (edge && !((seen >> w) & 1)) {
          seen |= 1u << w;
          q.push_back(w);
        }
      }
    }
    return seen == full_mask(m.k);
  };
  return reach(true) && reach(false);
}

PrimitivityResult sft_is_primitive(const Sft& m) {
  PrimitivityResult r;
  int bound = (m.k - 1) * (m.k - 1) + 1;
  auto powers = bool_powers(m, std::max(bound, 1));
  for (int e = 1; e <= bound; ++e)
    if (all_positive(powers[e - 1], m.k)) {
      r.primitive = true;
      r.exponent = e;
      return r;
    }
  // Graph period via BFS leveling (meaningful for irreducible graphs).
  std::vector<int> level(m.k, -1);
  level[0] = 0;
  std::deque<int> q{0};
  int g = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w = 0; w < m.k; ++w) {
      if (!m.allowed(v, w)) continue;
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        q.push_back(w);
      } else {
        g = std::gcd(g, level[v] + 1 - level[w]);
      }
    }
  }
  r.period = g < 0 ? -g : g;
  return r;
}

long long count_words_of_length(const Sft& m, int len) {
  if (len < 1) throw std::invalid_argument("count_words_of_length: len >= 1 required");
  if (len == 1) return m.k;
  auto p = int_power(m, len - 1);
  long long total = 0;
  for (const auto& row : p)
    for (long long v : row) total += v;
  return total;
}

long long trace_power(const Sft& m, int p) {
  auto mat = int_power(m, p);
  long long t = 0;
  for (int i = 0; i < m.k; ++i) t += mat[i][i];
  return t;
}

std::vector<Cylinder> cylinders_up_to(const Sft& m, int L) {
  if (L < 1) throw std::invalid_argument("cylinders_up_to: L >= 1 required");
  std::vector<Cylinder> out;
  for (int len = 1; len <= L; ++len) {
    std::vector<int> w;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(w.size()) == len) {
        std::string s;
        for (int c : w) s += static_cast<char>('0' + c);
        out.push_back({s, 0});
        return;
      }
      for (int c = 0; c < m.k; ++c) {
        if (!w.empty() && !m.allowed(w.back(), c)) continue;
        w.push_back(c);
        self(self);
        w.pop_back();
      }
    };
    rec(rec);
  }
  return out;
}

Pattern cylinder_pattern(const Sft& m, const Cylinder& c) {
  Pattern p;
  for (size_t t = 0; t < c.word.size(); ++t) {
    int s = c.word[t] - '0';
    if (s < 0 || s >= m.k) throw std::invalid_argument("cylinder_pattern: symbol out of alphabet");
    p.cells[c.anchor + static_cast<long long>(t)] = s;
  }
  if (!m.word_allowed([&] {
        std::vector<int> w;
        for (char ch : c.word) w.push_back(ch - '0');
        return w;
      }()))
    throw std::invalid_argument("cylinder_pattern: word not allowed by the transition matrix");
  return p;
}

Pattern shift_pattern(const Pattern& p, long long n) {
  Pattern out;
  for (auto [c, s] : p.cells) out.cells[c - n] = s;
  return out;
}

std::optional<Pattern> merge_patterns(const Pattern& a, const Pattern& b) {
  Pattern out = a;
  for (auto [c, s] : b.cells) {
    auto it = out.cells.find(c);
    if (it != out.cells.end() && it->second != s) return std::nullopt;
    out.cells[c] = s;
  }
  return out;
}

bool pattern_fillable(const Sft& m, const Pattern& p) {
  if (p.cells.empty()) return true;
  long long maxgap = 1;
  for (auto it = p.cells.begin(); std::next(it) != p.cells.end(); ++it)
    maxgap = std::max(maxgap, std::next(it)->first - it->first);
  auto powers = bool_powers(m, static_cast<int>(maxgap));
  for (auto it = p.cells.begin(); std::next(it) != p.cells.end(); ++it) {
    auto nx = std::next(it);
    long long gap = nx->first - it->first;
    if (!((powers[gap - 1][it->second] >> nx->second) & 1)) return false;
  }
  return true;
}

int PeriodicSeqPoint::at(long long i) const {
  long long p = static_cast<long long>(cycle.size());
  long long r = (i - phase) % p;
  if (r < 0) r += p;
  return cycle[r];
}

std::string PeriodicSeqPoint::str() const {
  std::string s = "(";
  for (int c : cycle) s += static_cast<char>('0' + c);
  s += ")^inf@" + std::to_string(phase);
  return s;
}

bool point_matches(const PeriodicSeqPoint& x, const Pattern& p) {
  for (auto [c, s] : p.cells)
    if (x.at(c) != s) return false;
  return true;
}

std::optional<long long> first_disagreement(const PeriodicSeqPoint& x, const PeriodicSeqPoint& y) {
  long long window = std::lcm(static_cast<long long>(x.cycle.size()),
                              static_cast<long long>(y.cycle.size()));
  for (long long a = 0; a <= window; ++a)
    for (long long i : {a, -a}) {
      if (x.at(i) != y.at(i)) return i;
      if (a == 0) break;
    }
  return std::nullopt;
}

namespace {

/// A path of exactly `len` edges from a to b, reconstructed greedily
/// (smallest symbol first). Assumes reachability was established.
std::vector<int> exact_path(const Sft& m, int a, int b, long long len,
                            const std::vector<BoolMat>& powers) {
  std::vector<int> path{a};
  int cur = a;
  for (long long t = 1; t < len; ++t) {
    long long remain = len - t;
    for (int s = 0; s < m.k; ++s) {
      if (!m.allowed(cur, s)) continue;
      if ((powers[remain - 1][s] >> b) & 1) {
        path.push_back(s);
        cur = s;
        break;
      }
    }
  }
  path.push_back(b);
  return path;
}

}  // namespace

std::optional<PeriodicSeqPoint> periodic_point_through(const Sft& m, const Pattern& p) {
  int return_bound = m.k * m.k + 1;
  if (p.cells.empty()) {
    auto powers = bool_powers(m, return_bound);
    for (int s = 0; s < m.k; ++s)
      for (int l = 1; l <= return_bound; ++l)
        if ((powers[l - 1][s] >> s) & 1) {
          auto path = exact_path(m, s, s, l, powers);
          path.pop_back();
          return PeriodicSeqPoint{path, 0};
        }
    return std::nullopt;
  }
  if (!pattern_fillable(m, p)) return std::nullopt;
  long long lo = p.cells.begin()->first;
  long long hi = p.cells.rbegin()->first;
  long long span = hi - lo;
  auto powers = bool_powers(m, static_cast<int>(std::max<long long>(span, return_bound)));
  // Fill the constrained block.
  std::vector<int> block{p.cells.begin()->second};
  for (auto it = p.cells.begin(); std::next(it) != p.cells.end(); ++it) {
    auto nx = std::next(it);
    auto seg = exact_path(m, it->second, nx->second, nx->first - it->first, powers);
    block.insert(block.end(), seg.begin() + 1, seg.end());
  }
  // Close the block into a cycle.
  int last = block.back(), first = block.front();
  for (int l = 1; l <= return_bound; ++l) {
    if (!((powers[l - 1][last] >> first) & 1)) continue;
    auto seg = exact_path(m, last, first, l, powers);
    std::vector<int> cycle = block;
    cycle.insert(cycle.end(), seg.begin() + 1, seg.end() - 1);
    PeriodicSeqPoint pt{cycle, lo};
    if (!point_matches(pt, p)) continue;  // period wrap clashed with the pattern
    return pt;
  }
  return std::nullopt;
}

ActionSystem periodic_subsystem(const Sft& m, int p) {
  if (p < 1) throw std::invalid_argument("periodic_subsystem: p >= 1 required");
  long long expected = trace_power(m, p);
  if (expected == 0)
    throw std::invalid_argument("periodic_subsystem: no points of period dividing " +
                                std::to_string(p) + " (trace " + std::to_string(expected) + ")");
  std::vector<std::vector<int>> words;
  std::vector<int> w;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == p) {
      if (m.allowed(w.back(), w.front())) words.push_back(w);
      return;
    }
    for (int c = 0; c < m.k; ++c) {
      if (!w.empty() && !m.allowed(w.back(), c)) continue;
      w.push_back(c);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  if (static_cast<long long>(words.size()) != expected)
    throw std::logic_error("periodic_subsystem: enumeration disagrees with trace");
  int n = static_cast<int>(words.size());

  auto sym_at = [&](int idx, long long i) {
    long long r = i % p;
    if (r < 0) r += p;
    return words[idx][r];
  };
  std::vector<Rational> table(static_cast<size_t>(n) * n, Rational(0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      // First disagreement by |i| within one period window.
      int md = -1;
      for (int d = 0; d < p && md < 0; ++d)
        for (long long i : {static_cast<long long>(d), static_cast<long long>(-d)}) {
          if (sym_at(a, i) != sym_at(b, i)) {
            md = d;
            break;
          }
          if (d == 0) break;
        }
      Rational dist = md < 0 ? Rational(0) : Rational::pow2_inverse(md);
      table[static_cast<size_t>(a) * n + b] = dist;
      table[static_cast<size_t>(b) * n + a] = dist;
    }

  Perm shift(n);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[words[i]] = i;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rotated(words[i].begin() + 1, words[i].end());
    rotated.push_back(words[i].front());
    shift[i] = index.at(rotated);
  }

  GroupSpec group;
  group.kind = GroupKind::FreeAbelian;
  group.rank = 1;
  group.abelian = true;
  group.generators = {shift};
  return ActionSystem{FiniteMetricSpace(n, std::move(table)), std::move(group),
                      "periodic_subsystem(" + m.name + "," + std::to_string(p) + ")"};
}

}  // namespace hyperdyn
