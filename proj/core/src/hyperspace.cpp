#include "hyperdyn/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hyperdyn {

int hyperspace_index(SetMask a) {
  if (a == 0) throw std::invalid_argument("hyperspace_index: empty set");
  return static_cast<int>(a) - 1;
}

HyperspaceSystem build_hyperspace_system(const ActionSystem& base, int cap) {
  const int n = base.space.points();
  if (n > cap)
    throw std::invalid_argument("build_hyperspace_system: base has " + std::to_string(n) +
                                " points, exceeding the hyperspace cap of " + std::to_string(cap));
  const int count = static_cast<int>(full_mask(n));  // 2^n - 1

  std::vector<SetMask> elements;
  elements.reserve(count);
  for (SetMask a = 1; a <= static_cast<SetMask>(count); ++a) elements.push_back(a);

  // Per-point cached minima: pmin[x][mask-1] = d(x, mask). Filled by
  // bit-order recurrence so each entry costs one comparison.
  std::vector<std::vector<Rational>> pmin(n, std::vector<Rational>(count));
  for (int x = 0; x < n; ++x)
    for (int m = 1; m <= count; ++m) {
      int low = lowest_point(static_cast<SetMask>(m));
      SetMask rest = static_cast<SetMask>(m) & (static_cast<SetMask>(m) - 1);
      const Rational& d = base.space.dist(x, low);
      pmin[x][m - 1] = rest == 0 ? d : Rational::min(d, pmin[x][rest - 1]);
    }

  std::vector<Rational> table(static_cast<size_t>(count) * count, Rational(0));
  for (int a = 1; a <= count; ++a)
    for (int b = a + 1; b <= count; ++b) {
      Rational h(0);
      for (int x = 0; x < n; ++x) {
        if (set_contains(static_cast<SetMask>(a), x)) h = Rational::max(h, pmin[x][b - 1]);
        if (set_contains(static_cast<SetMask>(b), x)) h = Rational::max(h, pmin[x][a - 1]);
      }
      table[static_cast<size_t>(a - 1) * count + (b - 1)] = h;
      table[static_cast<size_t>(b - 1) * count + (a - 1)] = h;
    }

  GroupSpec induced = base.group;
  induced.generators.clear();
  for (size_t gi = 0; gi < base.group.generators.size(); ++gi) {
    GroupElement g = GroupElement::generator(base.group, static_cast<int>(gi));
    Perm ind(count);
    for (int m = 1; m <= count; ++m)
      ind[m - 1] = hyperspace_index(act_on_set(base, g, static_cast<SetMask>(m)));
    induced.generators.push_back(std::move(ind));
  }

  return HyperspaceSystem{ActionSystem{FiniteMetricSpace(count, std::move(table)),
                                       std::move(induced), "hyperspace(" + base.name + ")"},
                          std::move(elements)};
}

bool vietoris_contains(const VietorisBasic& v, SetMask a) {
  if (a == 0) return false;
  SetMask uni = 0;
  for (SetMask u : v.opens) uni |= u;
  if ((a & ~uni) != 0) return false;
  for (SetMask u : v.opens)
    if ((a & u) == 0) return false;
  return true;
}

std::pair<VietorisBasic, VietorisBasic> pad_to_common_length(const VietorisBasic& v1,
                                                            const VietorisBasic& v2,
                                                            int points) {
  (void)points;
  VietorisBasic a = v1, b = v2;
  // Pad with the union of the basic's own opens: every member already lies
  // inside and meets the union, so <U_1..U_k> = <U_1..U_k, union U_i>.
  auto union_of = [](const VietorisBasic& v) {
    SetMask u = 0;
    for (SetMask o : v.opens) u |= o;
    return u;
  };
  size_t k = std::max(a.opens.size(), b.opens.size());
  SetMask ua = union_of(a), ub = union_of(b);
  while (a.opens.size() < k) a.opens.push_back(ua);
  while (b.opens.size() < k) b.opens.push_back(ub);
  return {a, b};
}

std::vector<SetMask> extension_members(SetMask u) {
  std::vector<SetMask> out;
  // Standard submask walk, ascending bit order.
  for (SetMask k = u; k != 0; k = (k - 1) & u) out.push_back(k);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace hyperdyn
