#include "isgd/action.hpp"

#include <set>
#include <stdexcept>

#include "isgd/errors.hpp"

namespace isgd {

PartialAction::PartialAction(StructurePtr structure, std::vector<std::string> carrier,
                             std::vector<Subset> domains, std::vector<PartialMap> maps)
    : structure_(std::move(structure)),
      carrier_(std::move(carrier)),
      domains_(std::move(domains)),
      maps_(std::move(maps)) {
  if (!structure_) throw std::invalid_argument("partial action without a structure");
  const std::size_t n = structure_->size();
  if (domains_.size() != n || maps_.size() != n)
    throw std::invalid_argument("partial action needs one domain and one map per arrow");
  std::set<std::string> seen;
  for (const auto& name : carrier_)
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate carrier element '" + name + "'");
  for (std::size_t i = 0; i < n; ++i) {
    if (domains_[i].universe() != carrier_.size() || maps_[i].universe() != carrier_.size())
      throw std::invalid_argument("domain or map of arrow '" + structure_->name(ArrowId{i}) +
                                  "' is not sized to the carrier");
  }
}

std::optional<ElementId> PartialAction::find_element(std::string_view name) const {
  for (std::size_t i = 0; i < carrier_.size(); ++i)
    if (carrier_[i] == name) return ElementId{i};
  return std::nullopt;
}

ElementId PartialAction::element(std::string_view name) const {
  auto x = find_element(name);
  if (!x) throw std::out_of_range("unknown carrier element '" + std::string(name) + "'");
  return *x;
}

std::vector<ElementId> PartialAction::elements() const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < carrier_.size(); ++i) out.emplace_back(i);
  return out;
}

bool operator==(const PartialAction& a, const PartialAction& b) {
  if (a.structure_ != b.structure_ && !(*a.structure_ == *b.structure_)) return false;
  return a.carrier_ == b.carrier_ && a.domains_ == b.domains_ && a.maps_ == b.maps_;
}

std::optional<ElementId> act(const PartialAction& action, ArrowId s, ElementId x) {
  const ArrowId s_star = action.structure().inverse(s);
  if (!action.domain(s_star).contains(x)) return std::nullopt;
  return action.map(s)(x);
}

PartialMap compose_maps(const PartialAction& action, ArrowId s, ArrowId t) {
  const auto& isg = action.structure();
  const Subset middle = action.domain(t) & action.domain(isg.inverse(s));
  PartialMap out(action.carrier_size());
  for (ElementId x : action.domain(isg.inverse(t)).elements()) {
    auto y = action.map(t)(x);
    if (!y || !middle.contains(*y)) continue;
    if (auto z = action.map(s)(*y)) out.set(x, *z);
  }
  return out;
}

namespace {

class Reporter {
 public:
  explicit Reporter(const PartialAction& action) : action_(action) {}

  void add(const char* axiom, const std::string& what, std::vector<ArrowId> arrows,
           std::vector<ElementId> points) {
    std::string msg = what;
    if (!arrows.empty() || !points.empty()) {
      msg += " [";
      bool first = true;
      for (ArrowId s : arrows) {
        msg += (first ? "" : ", ") + action_.structure().name(s);
        first = false;
      }
      for (ElementId x : points) {
        msg += (first ? "" : ", ") + name(x);
        first = false;
      }
      msg += "]";
    }
    report_.add({axiom, std::move(msg), std::move(arrows), std::move(points)});
  }

  std::string name(ElementId x) const {
    return x.index() < action_.carrier_size() ? action_.element_name(x) : "#" + std::to_string(x.value);
  }
  std::string arrow(ArrowId s) const { return action_.structure().name(s); }

  ValidationReport take() { return std::move(report_); }

 private:
  const PartialAction& action_;
  ValidationReport report_;
};

// theta_s should be a map X_{s*} -> X_s.
void check_typing(const PartialAction& action, Reporter& rep, const char* tag) {
  const auto& isg = action.structure();
  for (ArrowId s : isg.arrows()) {
    const Subset& src = action.domain(isg.inverse(s));
    const Subset& dst = action.domain(s);
    const PartialMap& f = action.map(s);
    for (ElementId x : action.elements()) {
      auto y = f(x);
      if (src.contains(x) && !y) {
        rep.add(tag, "theta_" + rep.arrow(s) + " undefined on its domain X_" + rep.arrow(isg.inverse(s)),
                {s}, {x});
      } else if (!src.contains(x) && y) {
        rep.add(tag, "theta_" + rep.arrow(s) + " defined outside X_" + rep.arrow(isg.inverse(s)), {s}, {x});
      }
      if (y && !dst.contains(*y)) {
        rep.add(tag, "theta_" + rep.arrow(s) + " maps " + rep.name(x) + " to " + rep.name(*y) +
                         ", outside X_" + rep.arrow(s),
                {s}, {x});
      }
    }
  }
}

Subset idempotent_cover(const PartialAction& action) {
  Subset cover(action.carrier_size());
  for (ArrowId e : idempotents(action.structure())) cover = cover | action.domain(e);
  return cover;
}

}  // namespace

ValidationReport validate_p_axioms(const PartialAction& action) {
  const auto& isg = action.structure();
  Reporter rep(action);
  check_typing(action, rep, "map");

  // P1
  for (ArrowId e : idempotents(isg)) {
    for (ElementId x : action.domain(e).elements()) {
      auto y = action.map(e)(x);
      if (!y || *y != x) rep.add("P1", "theta_" + rep.arrow(e) + " is not the identity", {e}, {x});
    }
  }
  const Subset cover = idempotent_cover(action);
  for (ElementId x : action.elements())
    if (!cover.contains(x)) rep.add("P1", "point lies in no idempotent domain", {}, {x});

  // P2
  for (ArrowId s : isg.arrows()) {
    const ArrowId ss = isg.mul(s, isg.inverse(s));
    for (ElementId x : action.domain(s).elements())
      if (!action.domain(ss).contains(x))
        rep.add("P2", "X_" + rep.arrow(s) + " not contained in X_" + rep.arrow(ss), {s}, {x});
  }

  // P3
  for (ArrowId s : isg.arrows()) {
    for (ArrowId t : isg.arrows()) {
      if (!isg.composable(s, t)) continue;
      const ArrowId st = isg.mul(s, t);
      const Subset& dom_t = action.domain(isg.inverse(t));
      const Subset lhs = action.map(t).preimage(action.domain(t) & action.domain(isg.inverse(s))) & dom_t;
      const Subset rhs = action.domain(isg.inverse(st)) & dom_t;
      for (ElementId x : action.elements()) {
        if (lhs.contains(x) != rhs.contains(x)) {
          rep.add("P3", "theta_" + rep.arrow(t) + "^-1(X_" + rep.arrow(t) + " & X_" + rep.arrow(isg.inverse(s)) +
                            ") != X_" + rep.arrow(isg.inverse(st)) + " & X_" + rep.arrow(isg.inverse(t)),
                  {s, t}, {x});
        }
      }
      for (ElementId x : rhs.elements()) {
        auto y = action.map(t)(x);
        auto z = y ? action.map(s)(*y) : std::nullopt;
        auto w = action.map(st)(x);
        if (!z || !w || *z != *w) {
          rep.add("P3", "theta_" + rep.arrow(s) + "(theta_" + rep.arrow(t) + "(x)) != theta_" + rep.arrow(st) + "(x)",
                  {s, t}, {x});
        }
      }
    }
  }
  return rep.take();
}

ValidationReport validate_e_axioms(const PartialAction& action) {
  const auto& isg = action.structure();
  Reporter rep(action);

  // E1
  Subset cover(action.carrier_size());
  for (ArrowId s : isg.arrows()) {
    const ArrowId s_star = isg.inverse(s);
    const Subset& src = action.domain(s_star);
    const Subset& dst = action.domain(s);
    const PartialMap& f = action.map(s);
    cover = cover | dst;
    if (!(f.domain() == src)) rep.add("E1", "theta_" + rep.arrow(s) + " is not defined exactly on X_" + rep.arrow(s_star), {s}, {});
    if (!(f.apply(src) == dst)) rep.add("E1", "theta_" + rep.arrow(s) + " is not onto X_" + rep.arrow(s), {s}, {});
    std::vector<bool> hit(action.carrier_size(), false);
    for (ElementId x : src.elements()) {
      auto y = f(x);
      if (!y) continue;
      if (y->index() >= action.carrier_size()) {
        rep.add("E1", "theta_" + rep.arrow(s) + " leaves the carrier", {s}, {x});
        continue;
      }
      if (!dst.contains(*y)) rep.add("E1", "theta_" + rep.arrow(s) + " leaves X_" + rep.arrow(s), {s}, {x});
      if (hit[y->index()]) rep.add("E1", "theta_" + rep.arrow(s) + " is not injective", {s}, {x});
      hit[y->index()] = true;
      auto back = action.map(s_star)(*y);
      if (!back || *back != x)
        rep.add("E1", "theta_" + rep.arrow(s_star) + " does not invert theta_" + rep.arrow(s), {s}, {x});
    }
  }
  for (ElementId x : action.elements())
    if (!cover.contains(x)) rep.add("E1", "point lies in no X_s", {}, {x});

  // E2
  for (ArrowId s : isg.arrows()) {
    for (ArrowId t : isg.arrows()) {
      if (!isg.composable(s, t)) continue;
      const ArrowId st = isg.mul(s, t);
      const PartialMap composite = compose_maps(action, s, t);
      for (ElementId x : composite.domain().elements()) {
        if (!action.domain(isg.inverse(st)).contains(x) || action.map(st)(x) != composite(x)) {
          rep.add("E2", "theta_" + rep.arrow(st) + " does not extend theta_" + rep.arrow(s) + " o theta_" + rep.arrow(t),
                  {s, t}, {x});
        }
      }
    }
  }

  // E3
  for (ArrowId s : isg.arrows()) {
    for (ArrowId t : isg.arrows()) {
      if (!natural_leq(isg, s, t)) continue;
      for (ElementId x : action.domain(s).elements())
        if (!action.domain(t).contains(x))
          rep.add("E3", rep.arrow(s) + " <= " + rep.arrow(t) + " but X_" + rep.arrow(s) + " not in X_" + rep.arrow(t),
                  {s, t}, {x});
    }
  }
  return rep.take();
}

bool is_global(const PartialAction& action) {
  const auto& isg = action.structure();
  for (ArrowId s : isg.arrows())
    if (!(action.domain(s) == action.domain(isg.mul(s, isg.inverse(s))))) return false;
  return true;
}

GlobalDiagnostic global_diagnostic(const PartialAction& action) {
  const auto& isg = action.structure();
  GlobalDiagnostic d;
  d.domains_saturated = is_global(action);
  d.composition_exact = true;
  for (ArrowId s : isg.arrows()) {
    for (ArrowId t : isg.arrows()) {
      if (!isg.composable(s, t)) continue;
      if (!(compose_maps(action, s, t) == action.map(isg.mul(s, t)))) d.composition_exact = false;
    }
  }
  return d;
}

ValidationReport check_derived_propositions(const PartialAction& action) {
  const auto& isg = action.structure();
  Reporter rep(action);

  for (ArrowId s : isg.arrows()) {
    const ArrowId s_star = isg.inverse(s);
    for (ElementId x : action.domain(s).elements()) {
      auto y = action.map(s_star)(x);
      if (!y || action.map(s)(*y) != x)
        rep.add("inverse", "theta_" + rep.arrow(s) + " o theta_" + rep.arrow(s_star) + " is not the identity", {s}, {x});
    }
  }

  for (ArrowId s : isg.arrows()) {
    for (ArrowId t : isg.arrows()) {
      if (!isg.composable(s, t)) continue;
      const Subset range = action.map(s).apply(action.domain(isg.inverse(s)) & action.domain(t));
      const Subset expected = action.domain(s) & action.domain(isg.mul(s, t));
      if (!(range == expected))
        rep.add("range", "theta_" + rep.arrow(s) + "(X_" + rep.arrow(isg.inverse(s)) + " & X_" + rep.arrow(t) +
                             ") != X_" + rep.arrow(s) + " & X_" + rep.arrow(isg.mul(s, t)),
                {s, t}, {});
    }
  }

  for (ArrowId s : isg.arrows()) {
    for (ArrowId t : isg.arrows()) {
      if (!natural_leq(isg, s, t)) continue;
      if (!action.domain(s).is_subset_of(action.domain(t)))
        rep.add("order", "X_" + rep.arrow(s) + " not contained in X_" + rep.arrow(t), {s, t}, {});
      for (ElementId x : action.domain(isg.inverse(s)).elements())
        if (action.map(t)(x) != action.map(s)(x))
          rep.add("order", "theta_" + rep.arrow(t) + " does not extend theta_" + rep.arrow(s), {s, t}, {x});
    }
  }

  const auto idem = idempotents(isg);
  for (ArrowId e : idem) {
    for (ArrowId f : idem) {
      if (!isg.composable(e, f)) continue;
      if (!(action.domain(isg.mul(e, f)) == (action.domain(e) & action.domain(f))))
        rep.add("idempotent", "X_" + rep.arrow(isg.mul(e, f)) + " != X_" + rep.arrow(e) + " & X_" + rep.arrow(f),
                {e, f}, {});
    }
  }
  return rep.take();
}

PartialAction restrict(const PartialAction& source, const Subset& subset, Coverage mode) {
  const auto& isg = source.structure();
  if (subset.universe() != source.carrier_size())
    throw std::invalid_argument("subset is not over the source carrier");

  std::vector<Subset> domains;
  domains.reserve(isg.size());
  for (ArrowId s : isg.arrows()) {
    const Subset reachable = source.map(s).apply(subset & source.domain(isg.inverse(s)));
    domains.push_back(reachable & subset);
  }

  Subset cover(source.carrier_size());
  for (ArrowId e : idempotents(isg)) cover = cover | domains[e.index()];
  std::vector<std::string> uncovered;
  for (ElementId x : subset.elements())
    if (!cover.contains(x)) uncovered.push_back(source.element_name(x));
  if (!uncovered.empty() && mode == Coverage::kStrict) throw CoverageError(std::move(uncovered));

  const Subset kept = subset & cover;
  std::vector<std::uint32_t> renumber(source.carrier_size(), kUndefined);
  std::vector<std::string> carrier;
  for (ElementId x : kept.elements()) {
    renumber[x.index()] = static_cast<std::uint32_t>(carrier.size());
    carrier.push_back(source.element_name(x));
  }

  std::vector<Subset> new_domains;
  std::vector<PartialMap> new_maps;
  for (ArrowId s : isg.arrows()) {
    Subset d(carrier.size());
    for (ElementId x : domains[s.index()].elements()) d.insert(ElementId{renumber[x.index()]});
    new_domains.push_back(std::move(d));
  }
  for (ArrowId s : isg.arrows()) {
    PartialMap m(carrier.size());
    for (ElementId x : domains[isg.inverse(s).index()].elements()) {
      auto y = source.map(s)(x);
      if (y && renumber[y->index()] != kUndefined)
        m.set(ElementId{renumber[x.index()]}, ElementId{renumber[y->index()]});
    }
    new_maps.push_back(std::move(m));
  }
  return PartialAction(source.structure_ptr(), std::move(carrier), std::move(new_domains), std::move(new_maps));
}

}  // namespace isgd
