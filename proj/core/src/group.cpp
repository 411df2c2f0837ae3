#include "hyperdyn/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hyperdyn {

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

GroupElement GroupElement::identity(const GroupSpec& spec) {
  GroupElement g;
  if (spec.kind == GroupKind::FreeAbelian) {
    g.free = true;
    g.exps.assign(spec.rank, 0);
  } else {
    g.free = false;
  }
  return g;
}

GroupElement GroupElement::generator(const GroupSpec& spec, int i, int exp) {
  if (i < 0 || i >= static_cast<int>(spec.generators.size()))
    throw std::invalid_argument("GroupElement::generator: index out of range");
  GroupElement g = identity(spec);
  if (g.free)
    g.exps[i] = exp;
  else if (exp != 0)
    g.word.push_back({i, exp});
  return g;
}

bool GroupElement::is_identity() const {
  if (free) return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
  return word.empty();
}

std::string GroupElement::str() const {
  std::string out;
  if (free) {
    out = "(";
    for (size_t i = 0; i < exps.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(exps[i]);
    }
    out += ")";
  } else {
    if (word.empty()) return "e";
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) out += " ";
      out += "g" + std::to_string(word[i].first);
      if (word[i].second != 1) out += "^" + std::to_string(word[i].second);
    }
  }
  return out;
}

GroupElement g_mul(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  GroupElement c = GroupElement::identity(spec);
  if (c.free) {
    for (int i = 0; i < spec.rank; ++i) c.exps[i] = a.exps[i] + b.exps[i];
    return c;
  }
  c.word = a.word;
  for (const auto& f : b.word) {
    if (!c.word.empty() && c.word.back().first == f.first) {
      c.word.back().second += f.second;
      if (c.word.back().second == 0) c.word.pop_back();
    } else {
      c.word.push_back(f);
    }
  }
  return c;
}

GroupElement g_inv(const GroupSpec& spec, const GroupElement& a) {
  GroupElement b = GroupElement::identity(spec);
  if (b.free) {
    for (int i = 0; i < spec.rank; ++i) b.exps[i] = -a.exps[i];
    return b;
  }
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
    b.word.push_back({it->first, -it->second});
  return b;
}

std::vector<std::string> validate_action_system(const ActionSystem& sys) {
  std::vector<std::string> problems;
  const int n = sys.space.points();
  if (sys.group.kind == GroupKind::FreeAbelian &&
      sys.group.rank != static_cast<int>(sys.group.generators.size()))
    problems.push_back("free abelian rank does not match generator count");
  for (size_t i = 0; i < sys.group.generators.size(); ++i) {
    const Perm& g = sys.group.generators[i];
    if (static_cast<int>(g.size()) != n) {
      problems.push_back("generator " + std::to_string(i) + " acts on wrong point count");
      continue;
    }
    if (!is_permutation(g))
      problems.push_back("generator " + std::to_string(i) + " is not a bijection");
  }
  if (!problems.empty()) return problems;
  bool need_commute = sys.group.abelian || sys.group.kind == GroupKind::FreeAbelian;
  if (need_commute) {
    for (size_t i = 0; i < sys.group.generators.size(); ++i)
      for (size_t j = i + 1; j < sys.group.generators.size(); ++j) {
        if (compose_perm(sys.group.generators[i], sys.group.generators[j]) !=
            compose_perm(sys.group.generators[j], sys.group.generators[i]))
          problems.push_back("generators " + std::to_string(i) + " and " + std::to_string(j) +
                             " do not commute but the group is declared abelian");
      }
  }
  return problems;
}

namespace {

int apply_gen_power(const ActionSystem& sys, int gen, int exp, int x) {
  const Perm& p = sys.group.generators[gen];
  if (exp >= 0) {
    for (int t = 0; t < exp; ++t) x = p[x];
  } else {
    Perm q = inverse_perm(p);
    for (int t = 0; t < -exp; ++t) x = q[x];
  }
  return x;
}

}  // namespace

int evaluate(const ActionSystem& sys, const GroupElement& g, int x) {
  if (x < 0 || x >= sys.space.points())
    throw std::invalid_argument("evaluate: point out of range");
  if (g.free) {
    for (size_t i = 0; i < g.exps.size(); ++i) x = apply_gen_power(sys, static_cast<int>(i), g.exps[i], x);
    return x;
  }
  // Factors compose as functions: the leftmost factor is applied last.
  for (auto it = g.word.rbegin(); it != g.word.rend(); ++it)
    x = apply_gen_power(sys, it->first, it->second, x);
  return x;
}

SetMask act_on_set(const ActionSystem& sys, const GroupElement& g, SetMask a) {
  if (a == 0) throw std::invalid_argument("act_on_set: empty set");
  SetMask out = 0;
  for (int i = 0; i < sys.space.points(); ++i)
    if (set_contains(a, i)) out |= SetMask{1} << evaluate(sys, g, i);
  return out;
}

Perm element_perm(const ActionSystem& sys, const GroupElement& g) {
  Perm p(sys.space.points());
  for (int i = 0; i < sys.space.points(); ++i) p[i] = evaluate(sys, g, i);
  return p;
}

ImageGroup::ImageGroup(const ActionSystem& sys) {
  const int n = sys.space.points();
  Perm id = identity_perm(n);
  elements_.push_back(id);
  words_.push_back(GroupElement::identity(sys.group));
  index_[id] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < sys.group.generators.size(); ++i) {
      for (int sign : {+1, -1}) {
        Perm step = sys.group.generators[i];
        if (sign < 0) step = inverse_perm(step);
        Perm next = compose_perm(elements_[cur], step);
        if (index_.count(next)) continue;
        int idx = static_cast<int>(elements_.size());
        index_[next] = idx;
        elements_.push_back(next);
        words_.push_back(g_mul(sys.group, words_[cur],
                               GroupElement::generator(sys.group, static_cast<int>(i), sign)));
        queue.push_back(idx);
      }
    }
  }
}

int ImageGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("ImageGroup: permutation not in image");
  return it->second;
}

int ImageGroup::mul(int a, int b) const { return index_of(compose_perm(elements_[a], elements_[b])); }

int ImageGroup::inv(int a) const { return index_of(inverse_perm(elements_[a])); }

SetMask ImageGroup::apply_set(int g, SetMask s) const {
  SetMask out = 0;
  const Perm& p = elements_[g];
  for (size_t i = 0; i < p.size(); ++i)
    if (set_contains(s, static_cast<int>(i))) out |= SetMask{1} << p[i];
  return out;
}

int ImageGroup::element_image(const ActionSystem& sys, const GroupElement& g) const {
  return index_of(element_perm(sys, g));
}

SetMask orbit(const ActionSystem& sys, int x) {
  if (x < 0 || x >= sys.space.points()) throw std::invalid_argument("orbit: point out of range");
  SetMask seen = SetMask{1} << x;
  std::deque<int> queue{x};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const Perm& g : sys.group.generators) {
      for (int next : {g[cur], inverse_perm(g)[cur]}) {
        if (!set_contains(seen, next)) {
          seen |= SetMask{1} << next;
          queue.push_back(next);
        }
      }
    }
  }
  return seen;
}

PeriodicPointReport is_periodic_point(const ActionSystem& sys, int x) {
  PeriodicPointReport r;
  r.orbit_size = set_size(orbit(sys, x));
  r.stabilizer_index = r.orbit_size;
  return r;
}

namespace {

// Sign-rank ordering on exponents: 0 first, then positive, then negative,
// each by magnitude.
std::pair<int, int> exp_key(int e) { return {e == 0 ? 0 : (e > 0 ? 1 : 2), e > 0 ? e : -e}; }

void gen_vectors(int rank, int budget, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == rank) {
    out.push_back(cur);
    return;
  }
  for (int e = -budget; e <= budget; ++e) {
    cur.push_back(e);
    gen_vectors(rank, budget - (e > 0 ? e : -e), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GroupElement> enumerate_ball(const GroupSpec& spec, int radius) {
  std::vector<GroupElement> out;
  if (spec.kind == GroupKind::FreeAbelian) {
    std::vector<std::vector<int>> vecs;
    std::vector<int> cur;
    gen_vectors(spec.rank, radius, cur, vecs);
    std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) {
      int la = 0, lb = 0;
      for (int e : a) la += e > 0 ? e : -e;
      for (int e : b) lb += e > 0 ? e : -e;
      if (la != lb) return la < lb;
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return exp_key(a[i]) < exp_key(b[i]);
      return false;
    });
    for (auto& v : vecs) {
      GroupElement g;
      g.free = true;
      g.exps = std::move(v);
      out.push_back(std::move(g));
    }
    return out;
  }
  // Finite group identified with its image: breadth-first over reduced
  // words, keeping the first (shortest) word per distinct image element.
  if (spec.generators.empty()) {
    GroupElement id;
    id.free = false;
    out.push_back(id);
    return out;
  }
  int n = static_cast<int>(spec.generators.front().size());
  std::map<Perm, int> seen;
  std::vector<Perm> perms{identity_perm(n)};
  std::vector<GroupElement> words;
  GroupElement id;
  id.free = false;
  words.push_back(id);
  seen[perms[0]] = 0;
  std::deque<std::pair<int, int>> queue{{0, 0}};  // element index, depth
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= radius) continue;
    for (size_t i = 0; i < spec.generators.size(); ++i)
      for (int sign : {+1, -1}) {
        Perm step = spec.generators[i];
        if (sign < 0) step = inverse_perm(step);
        Perm next = compose_perm(perms[cur], step);
        if (seen.count(next)) continue;
        seen[next] = static_cast<int>(perms.size());
        perms.push_back(next);
        GroupElement gi;
        gi.free = false;
        gi.word = {{static_cast<int>(i), sign}};
        words.push_back(g_mul(spec, words[cur], gi));
        queue.push_back({static_cast<int>(perms.size()) - 1, depth + 1});
      }
  }
  return words;
}

}  // namespace hyperdyn
