#include "hyperdyn/properties.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperdyn {

namespace {

Json mask_json(SetMask s) {
  Json arr = Json::array();
  for (int i = 0; i < 64; ++i)
    if (set_contains(s, i)) arr.push_back(i);
  return arr;
}

Json element_json(const GroupElement& g) {
  if (g.free) return Json(g.exps);
  Json arr = Json::array();
  for (auto [gen, exp] : g.word) arr.push_back(Json::array({gen, exp}));
  return arr;
}

bool require_nonempty(SetMask s, const char* what) {
  if (s == 0) throw std::invalid_argument(std::string(what) + ": empty open set");
  return true;
}

}  // namespace

NSet n_set(const ActionSystem& sys, const ImageGroup& image, SetMask u, SetMask v, int radius) {
  require_nonempty(u, "n_set");
  require_nonempty(v, "n_set");
  NSet out;
  for (int g = 0; g < image.size(); ++g)
    if ((image.apply_set(g, u) & v) != 0) out.image_elements.push_back(g);
  std::sort(out.image_elements.begin(), out.image_elements.end());
  for (const GroupElement& w : enumerate_ball(sys.group, radius)) {
    int g = image.element_image(sys, w);
    if (std::binary_search(out.image_elements.begin(), out.image_elements.end(), g))
      out.sample.push_back(w);
  }
  out.fiber_note = sys.group.is_infinite()
                       ? "each listed image element has an infinite fiber (a coset of the "
                         "kernel of the map onto the image group)"
                       : "the group is finite and identified with its image";
  return out;
}

PropertyReport is_transitive(const ActionSystem& sys) {
  PropertyReport r;
  r.property = "transitive";
  const int n = sys.space.points();
  // Single-orbit criterion: on a finite discrete space every open contains
  // a singleton, so transitivity reduces to one orbit of the image group.
  SetMask orb = orbit(sys, 0);
  if (orb == full_mask(n)) {
    r.verdict = Verdict::Holds;
    ImageGroup image(sys);
    Json wit = Json::array();
    int base_points = std::min(n, 12);
    for (int x = 0; x < base_points; ++x)
      for (int y = 0; y < n; ++y) {
        for (int g = 0; g < image.size(); ++g)
          if (image.apply(g, x) == y) {
            wit.push_back(Json{{"from", x}, {"to", y}, {"element", element_json(image.word(g))}});
            break;
          }
      }
    r.detail["witnesses"] = wit;
    if (base_points < n) r.detail["witness_note"] = "witness rows truncated to the first 12 points";
  } else {
    r.verdict = Verdict::Fails;
    int outside = lowest_point(full_mask(n) & ~orb);
    r.detail["counterexample"] =
        Json{{"U", mask_json(SetMask{1})}, {"V", mask_json(SetMask{1} << outside)},
             {"note", "the points lie in different orbits of the image group"}};
  }
  return r;
}

PropertyReport is_weakly_mixing(const ActionSystem& sys) {
  PropertyReport r;
  r.property = "weakly-mixing";
  const int n = sys.space.points();
  if (n == 1) {
    r.verdict = Verdict::Holds;
    r.detail["note"] = "single-point space: every open set equals X";
    return r;
  }
  // Singleton obstruction: U1 = U2 = {x} forces gamma x = y1 = y2.
  r.verdict = Verdict::Fails;
  r.detail["counterexample"] = Json{{"U1", mask_json(1)},
                                    {"U2", mask_json(1)},
                                    {"V1", mask_json(1)},
                                    {"V2", mask_json(2)},
                                    {"note",
                                     "one element would have to map the point 0 into two "
                                     "disjoint singletons simultaneously"}};
  return r;
}

PropertyReport is_mixing(const ActionSystem& sys) {
  PropertyReport r;
  r.property = "mixing";
  if (!sys.group.is_infinite()) {
    ImageGroup image(sys);
    r.verdict = Verdict::VacuouslyHolds;
    r.detail["excluded_set"] = "F = the whole group (order " + std::to_string(image.size()) + ")";
    r.detail["note"] = "with a finite group, F may be taken to be the group itself";
    return r;
  }
  const int n = sys.space.points();
  if (n == 1) {
    r.verdict = Verdict::Holds;
    r.detail["note"] = "single-point space";
    return r;
  }
  // Image finite, group infinite: every fiber is infinite, so one failing
  // image element defeats every finite excluded set.
  r.verdict = Verdict::Fails;
  ImageGroup image(sys);
  for (int g = 0; g < image.size(); ++g) {
    int gx = image.apply(g, 0);
    int y = gx == 0 ? 1 : 0;
    r.detail["counterexample"] = Json{{"image_element", element_json(image.word(g))},
                                      {"U", mask_json(1)},
                                      {"V", mask_json(SetMask{1} << y)},
                                      {"note", "this element's fiber is infinite and misses V"}};
    break;
  }
  return r;
}

PropertyReport has_dense_periodic_points(const ActionSystem& sys) {
  PropertyReport r;
  r.property = "dense-periodic-points";
  r.verdict = Verdict::Holds;
  Json sizes = Json::array();
  for (int x = 0; x < sys.space.points(); ++x) sizes.push_back(is_periodic_point(sys, x).orbit_size);
  r.detail["orbit_sizes"] = sizes;
  r.detail["note"] = "every point of a finite system is periodic";
  return r;
}

PropertyReport is_sdic(const ActionSystem& sys) {
  PropertyReport r;
  r.property = "sdic";
  r.verdict = Verdict::Fails;
  r.detail["obstruction"] =
      "isolated points: the neighborhood U = {x} forces y = x, so d(gx, gy) = 0 "
      "for every group element and no sensitivity constant works";
  return r;
}

PropertyReport is_devaney_chaotic(const ActionSystem& sys) {
  PropertyReport r;
  r.property = "devaney-chaotic";
  PropertyReport t = is_transitive(sys);
  PropertyReport p = has_dense_periodic_points(sys);
  bool ok = verdict_positive(t.verdict) && verdict_positive(p.verdict);
  r.verdict = ok ? Verdict::Holds : Verdict::Fails;
  r.detail["transitive"] = t.to_json();
  r.detail["dense_periodic_points"] = p.to_json();
  r.detail["sdic_informational"] = is_sdic(sys).to_json();
  return r;
}

PropertyReport weak_mixing_product_group_diagnostic(const ActionSystem& sys) {
  PropertyReport r = is_transitive(sys);
  r.property = "weak-mixing-product-group-diagnostic";
  r.detail["note"] =
      "transitivity of the product group acting with independent components; "
      "equivalent to plain transitivity and strictly weaker than the "
      "single-element weak mixing condition";
  return r;
}

WitnessChain simultaneous_weak_mixing_witness(const ActionSystem& sys,
                                              const std::vector<SetMask>& us,
                                              const std::vector<SetMask>& vs, int radius) {
  if (!(sys.group.abelian || sys.group.kind == GroupKind::FreeAbelian))
    throw std::invalid_argument("simultaneous_weak_mixing_witness: abelian group required");
  if (us.empty() || us.size() != vs.size())
    throw std::invalid_argument("simultaneous_weak_mixing_witness: need equal non-empty lists");
  for (size_t i = 0; i < us.size(); ++i) {
    require_nonempty(us[i], "simultaneous_weak_mixing_witness");
    require_nonempty(vs[i], "simultaneous_weak_mixing_witness");
  }
  (void)radius;  // quantifiers over the group route through the exact finite image
  ImageGroup image(sys);
  WitnessChain chain;
  SetMask e = us[0], f = vs[0];
  for (size_t k = 1; k < us.size(); ++k) {
    int pivot = -1;
    for (int g = 0; g < image.size(); ++g)
      if ((image.apply_set(g, e) & us[k]) != 0 && (image.apply_set(g, f) & vs[k]) != 0) {
        pivot = g;
        break;
      }
    if (pivot < 0) {
      chain.blocking_index = static_cast<int>(k);
      return chain;
    }
    int ginv = image.inv(pivot);
    e &= image.apply_set(ginv, us[k]);
    f &= image.apply_set(ginv, vs[k]);
    if (e == 0 || f == 0) throw std::logic_error("witness chain produced an empty intermediate");
    chain.steps.push_back({e, f, image.word(pivot)});
  }
  int fin = -1;
  for (int g = 0; g < image.size(); ++g)
    if ((image.apply_set(g, e) & f) != 0) {
      fin = g;
      break;
    }
  if (fin < 0) {
    chain.blocking_index = 0;
    return chain;
  }
  // Exact containment check: N(E, F) inside the intersection of the N(U_i, V_i).
  chain.containment_verified = true;
  for (int g = 0; g < image.size(); ++g) {
    if ((image.apply_set(g, e) & f) == 0) continue;
    for (size_t i = 0; i < us.size(); ++i)
      if ((image.apply_set(g, us[i]) & vs[i]) == 0) chain.containment_verified = false;
  }
  chain.success = true;
  chain.final_element = image.word(fin);
  // The final element must satisfy all pairs; recheck directly.
  for (size_t i = 0; i < us.size(); ++i)
    if ((image.apply_set(fin, us[i]) & vs[i]) == 0)
      throw std::logic_error("final witness fails a pair despite the containment argument");
  return chain;
}

// ---- Subshift mode ----

bool sft_connects(const Sft& m, const Pattern& u, long long n, const Pattern& v) {
  auto merged = merge_patterns(shift_pattern(u, n), v);
  return merged && pattern_fillable(m, *merged);
}

std::optional<long long> sft_find_connector(const Sft& m, const Pattern& u, const Pattern& v,
                                            int radius) {
  for (int a = 0; a <= radius; ++a)
    for (long long n : {static_cast<long long>(a), static_cast<long long>(-a)}) {
      if (sft_connects(m, u, n, v)) return n;
      if (a == 0) break;
    }
  return std::nullopt;
}

namespace {

Json bounds_json(const Bounds& b) {
  return Json{{"word_radius", b.word_radius}, {"cylinder_length", b.cylinder_length}};
}

constexpr int kWitnessSampleCap = 40;

}  // namespace

PropertyReport sft_is_transitive(const Sft& m, const Bounds& bounds) {
  PropertyReport r;
  r.property = "transitive";
  auto cyls = cylinders_up_to(m, bounds.cylinder_length);
  Json wits = Json::array();
  long long count = 0;
  for (const auto& u : cyls)
    for (const auto& v : cyls) {
      auto n = sft_find_connector(m, cylinder_pattern(m, u), cylinder_pattern(m, v),
                                  bounds.word_radius);
      if (!n) {
        r.verdict = Verdict::Fails;
        r.detail["counterexample"] = Json{{"U", u.word}, {"V", v.word},
                                          {"note", "no connector within the exponent radius"}};
        r.detail["bounds"] = bounds_json(bounds);
        return r;
      }
      if (wits.size() < kWitnessSampleCap)
        wits.push_back(Json{{"U", u.word}, {"V", v.word}, {"exponent", *n}});
      ++count;
    }
  r.verdict = Verdict::HoldsUpToBounds;
  r.detail["witnesses"] = wits;
  r.detail["pairs_checked"] = count;
  r.detail["bounds"] = bounds_json(bounds);
  return r;
}

PropertyReport sft_is_weakly_mixing(const Sft& m, const Bounds& bounds) {
  PropertyReport r;
  r.property = "weakly-mixing";
  auto cyls = cylinders_up_to(m, bounds.cylinder_length);
  Json wits = Json::array();
  long long count = 0;
  for (const auto& u1 : cyls)
    for (const auto& v1 : cyls)
      for (const auto& u2 : cyls)
        for (const auto& v2 : cyls) {
          Pattern pu1 = cylinder_pattern(m, u1), pv1 = cylinder_pattern(m, v1);
          Pattern pu2 = cylinder_pattern(m, u2), pv2 = cylinder_pattern(m, v2);
          std::optional<long long> found;
          for (int a = 0; a <= bounds.word_radius && !found; ++a)
            for (long long n : {static_cast<long long>(a), static_cast<long long>(-a)}) {
              if (sft_connects(m, pu1, n, pv1) && sft_connects(m, pu2, n, pv2)) {
                found = n;
                break;
              }
              if (a == 0) break;
            }
          if (!found) {
            r.verdict = Verdict::Fails;
            r.detail["counterexample"] =
                Json{{"U1", u1.word}, {"V1", v1.word}, {"U2", u2.word}, {"V2", v2.word},
                     {"note", "no single exponent connects both pairs within the radius"}};
            r.detail["bounds"] = bounds_json(bounds);
            return r;
          }
          if (wits.size() < kWitnessSampleCap)
            wits.push_back(Json{{"U1", u1.word}, {"V1", v1.word}, {"U2", u2.word},
                                {"V2", v2.word}, {"exponent", *found}});
          ++count;
        }
  r.verdict = Verdict::HoldsUpToBounds;
  r.detail["witnesses"] = wits;
  r.detail["tuples_checked"] = count;
  r.detail["bounds"] = bounds_json(bounds);
  return r;
}

PropertyReport sft_is_mixing(const Sft& m, const Bounds& bounds) {
  PropertyReport r;
  r.property = "mixing";
  auto cyls = cylinders_up_to(m, bounds.cylinder_length);
  auto prim = sft_is_primitive(m);
  r.detail["primitivity_oracle"] =
      prim.primitive ? Json{{"primitive", true}, {"exponent", prim.exponent}}
                     : Json{{"primitive", false}, {"period", prim.period}};
  long long worst_threshold = 0;
  Json excluded = Json::array();
  for (const auto& u : cyls)
    for (const auto& v : cyls) {
      Pattern pu = cylinder_pattern(m, u), pv = cylinder_pattern(m, v);
      std::vector<long long> bad;
      for (long long n = -bounds.word_radius; n <= bounds.word_radius; ++n)
        if (!sft_connects(m, pu, n, pv)) bad.push_back(n);
      long long threshold = 0;
      for (long long n : bad) threshold = std::max(threshold, (n < 0 ? -n : n) + 1);
      if (threshold > bounds.word_radius) {
        r.verdict = Verdict::Fails;
        long long failing = bad.back();
        r.detail["counterexample"] =
            Json{{"U", u.word}, {"V", v.word}, {"failing_exponent", failing},
                 {"note", "failures persist to the edge of the radius; no finite excluded "
                          "set fits inside the bound"}};
        r.detail["bounds"] = bounds_json(bounds);
        r.detail["oracle_agrees"] = !prim.primitive;
        return r;
      }
      worst_threshold = std::max<long long>(worst_threshold, threshold);
      if (excluded.size() < kWitnessSampleCap && !bad.empty())
        excluded.push_back(Json{{"U", u.word}, {"V", v.word}, {"excluded_exponents", bad}});
    }
  r.verdict = Verdict::HoldsUpToBounds;
  r.detail["excluded_sets"] = excluded;
  r.detail["uniform_threshold"] = worst_threshold;
  r.detail["bounds"] = bounds_json(bounds);
  r.detail["oracle_agrees"] = prim.primitive;
  return r;
}

PropertyReport sft_has_dense_periodic_points(const Sft& m, const Bounds& bounds) {
  PropertyReport r;
  r.property = "dense-periodic-points";
  auto cyls = cylinders_up_to(m, bounds.cylinder_length);
  Json wits = Json::array();
  for (const auto& u : cyls) {
    auto pt = periodic_point_through(m, cylinder_pattern(m, u));
    if (!pt) {
      r.verdict = Verdict::Fails;
      r.detail["counterexample"] = Json{{"cylinder", u.word},
                                        {"note", "no periodic cycle through this word"}};
      r.detail["bounds"] = bounds_json(bounds);
      return r;
    }
    if (wits.size() < kWitnessSampleCap)
      wits.push_back(Json{{"cylinder", u.word}, {"periodic_point", pt->str()}});
  }
  r.verdict = Verdict::HoldsUpToBounds;
  r.detail["witnesses"] = wits;
  r.detail["bounds"] = bounds_json(bounds);
  return r;
}

PropertyReport sft_is_sdic(const Sft& m, const std::vector<Rational>& delta_grid,
                           const Bounds& bounds) {
  PropertyReport r;
  r.property = "sdic";
  if (delta_grid.empty())
    throw std::invalid_argument("sft_is_sdic: empty delta grid");
  Rational delta(0);
  for (const Rational& d : delta_grid)
    if (d <= Rational(1) && delta < d) delta = d;
  if (delta.is_zero() || delta.is_negative()) {
    r.verdict = Verdict::Fails;
    r.detail["note"] = "no candidate sensitivity constant in (0, 1] in the grid; the shift "
                       "metric never exceeds 1";
    return r;
  }
  auto cyls = cylinders_up_to(m, bounds.cylinder_length);
  Json wits = Json::array();
  for (const auto& u : cyls) {
    Pattern pu = cylinder_pattern(m, u);
    auto x = periodic_point_through(m, pu);
    if (!x) {
      r.verdict = Verdict::Fails;
      r.detail["counterexample"] = Json{{"cylinder", u.word}};
      return r;
    }
    bool separated = false;
    for (int t = static_cast<int>(u.word.size()); t <= bounds.word_radius && !separated; ++t) {
      for (int s = 0; s < m.k; ++s) {
        if (s == x->at(t)) continue;
        Pattern branch = pu;
        branch.cells[t] = s;
        if (!pattern_fillable(m, branch)) continue;
        auto y = periodic_point_through(m, branch);
        if (!y) continue;
        // shift^t moves the disagreement to coordinate 0: distance 1 >= delta.
        if (wits.size() < kWitnessSampleCap)
          wits.push_back(Json{{"cylinder", u.word}, {"separating_exponent", t},
                              {"x", x->str()}, {"y", y->str()}});
        separated = true;
        break;
      }
    }
    if (!separated) {
      r.verdict = Verdict::Fails;
      bool deterministic = true;
      for (int s = 0; s < m.k; ++s) deterministic = deterministic && set_size(m.rows[s]) == 1;
      r.detail["counterexample"] = Json{
          {"cylinder", u.word},
          {"note", deterministic ? "deterministic transitions: the shift space is finite and "
                                   "its points are isolated"
                                 : "no separating point found within the exponent radius"}};
      r.detail["bounds"] = bounds_json(bounds);
      return r;
    }
  }
  r.verdict = Verdict::HoldsUpToBounds;
  r.detail["delta"] = delta.str();
  r.detail["witnesses"] = wits;
  r.detail["bounds"] = bounds_json(bounds);
  return r;
}

PropertyReport sft_is_devaney_chaotic(const Sft& m, const Bounds& bounds) {
  PropertyReport r;
  r.property = "devaney-chaotic";
  PropertyReport t = sft_is_transitive(m, bounds);
  PropertyReport p = sft_has_dense_periodic_points(m, bounds);
  bool ok = verdict_positive(t.verdict) && verdict_positive(p.verdict);
  r.verdict = ok ? Verdict::HoldsUpToBounds : Verdict::Fails;
  r.detail["transitive"] = t.to_json();
  r.detail["dense_periodic_points"] = p.to_json();
  r.detail["sdic_informational"] = sft_is_sdic(m, {Rational(1)}, bounds).to_json();
  r.detail["bounds"] = bounds_json(bounds);
  return r;
}

SftWitnessChain sft_simultaneous_weak_mixing_witness(const Sft& m,
                                                     const std::vector<Pattern>& us,
                                                     const std::vector<Pattern>& vs, int radius) {
  if (us.empty() || us.size() != vs.size())
    throw std::invalid_argument("sft_simultaneous_weak_mixing_witness: need equal non-empty lists");
  SftWitnessChain chain;
  Pattern e = us[0], f = vs[0];
  for (size_t k = 1; k < us.size(); ++k) {
    std::optional<long long> pivot;
    for (int a = 0; a <= radius && !pivot; ++a)
      for (long long n : {static_cast<long long>(a), static_cast<long long>(-a)}) {
        if (sft_connects(m, e, n, us[k]) && sft_connects(m, f, n, vs[k])) {
          pivot = n;
          break;
        }
        if (a == 0) break;
      }
    if (!pivot) {
      chain.blocking_index = static_cast<int>(k);
      return chain;
    }
    auto enew = merge_patterns(e, shift_pattern(us[k], -*pivot));
    auto fnew = merge_patterns(f, shift_pattern(vs[k], -*pivot));
    if (!enew || !fnew || !pattern_fillable(m, *enew) || !pattern_fillable(m, *fnew))
      throw std::logic_error("sft witness chain produced an empty intermediate");
    e = *enew;
    f = *fnew;
    chain.steps.push_back({e, f, *pivot});
  }
  auto fin = sft_find_connector(m, e, f, radius);
  if (!fin) {
    chain.blocking_index = 0;
    return chain;
  }
  chain.containment_verified = true;
  for (long long n = -radius; n <= radius; ++n) {
    if (!sft_connects(m, e, n, f)) continue;
    for (size_t i = 0; i < us.size(); ++i)
      if (!sft_connects(m, us[i], n, vs[i])) chain.containment_verified = false;
  }
  chain.success = true;
  chain.final_exponent = *fin;
  for (size_t i = 0; i < us.size(); ++i)
    if (!sft_connects(m, us[i], *fin, vs[i]))
      throw std::logic_error("final sft witness fails a pair despite the containment argument");
  return chain;
}

}  // namespace hyperdyn
