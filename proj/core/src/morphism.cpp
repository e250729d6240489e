#include "isgd/morphism.hpp"

#include <sstream>
#include <stdexcept>

#include "isgd/errors.hpp"

namespace isgd {

namespace {

bool same_structure(const PartialAction& a, const PartialAction& b) {
  return a.structure_ptr() == b.structure_ptr() || a.structure() == b.structure();
}

bool same_action(const ActionPtr& a, const ActionPtr& b) { return a == b || *a == *b; }

bool is_injective(const std::vector<ElementId>& map, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (ElementId y : map) {
    if (hit[y.index()]) return false;
    hit[y.index()] = true;
  }
  return true;
}

Subset image_of(const SFunction& f) {
  Subset out(f.target->carrier_size());
  for (ElementId y : f.map) out.insert(y);
  return out;
}

// Fast predicate used by the enumerators; is_s_function() is the reporting twin.
bool s_function_holds(const PartialAction& x, const PartialAction& y, const std::vector<ElementId>& map) {
  const auto& isg = x.structure();
  for (ArrowId s : isg.arrows()) {
    for (ElementId p : x.domain(s).elements())
      if (!y.domain(s).contains(map[p.index()])) return false;
    for (ElementId p : x.domain(isg.inverse(s)).elements()) {
      auto q = x.map(s)(p);
      auto r = y.map(s)(map[p.index()]);
      if (!q || !r || map[q->index()] != *r) return false;
    }
  }
  return true;
}

std::string arrow_name(const SFunction& f, ArrowId s) { return f.source->structure().name(s); }

}  // namespace

SFunction make_s_function(ActionPtr source, ActionPtr target, std::vector<ElementId> map) {
  if (!source || !target) throw std::invalid_argument("S-function endpoints must be set");
  if (!same_structure(*source, *target))
    throw std::invalid_argument("S-function endpoints act by different structures");
  if (map.size() != source->carrier_size())
    throw std::invalid_argument("S-function map is not total on the source carrier");
  for (ElementId y : map)
    if (y.index() >= target->carrier_size()) throw std::invalid_argument("S-function map leaves the target carrier");
  return SFunction{std::move(source), std::move(target), std::move(map)};
}

SFunction identity_function(const ActionPtr& action) {
  return make_s_function(action, action, action->elements());
}

SFunction inclusion(const ActionPtr& sub, const ActionPtr& super) {
  std::vector<ElementId> map;
  for (const auto& name : sub->carrier()) map.push_back(super->element(name));
  return make_s_function(sub, super, std::move(map));
}

ValidationReport is_s_function(const SFunction& f) {
  ValidationReport report;
  const PartialAction& x = *f.source;
  const PartialAction& y = *f.target;
  const auto& isg = x.structure();
  for (ArrowId s : isg.arrows()) {
    for (ElementId p : x.domain(s).elements()) {
      if (!y.domain(s).contains(f(p)))
        report.add({"s-function-domain",
                    "phi(" + x.element_name(p) + ") = " + y.element_name(f(p)) + " not in Y_" + arrow_name(f, s),
                    {s}, {p}});
    }
    for (ElementId p : x.domain(isg.inverse(s)).elements()) {
      auto q = x.map(s)(p);
      auto r = y.map(s)(f(p));
      if (!q || !r || f(*q) != *r)
        report.add({"s-function-equivariance",
                    "phi(theta_" + arrow_name(f, s) + "(" + x.element_name(p) + ")) != theta_" + arrow_name(f, s) +
                        "(phi(" + x.element_name(p) + "))",
                    {s}, {p}});
    }
  }
  return report;
}

namespace {

void check_injective(const SFunction& f, ValidationReport& report) {
  std::vector<std::uint32_t> first(f.target->carrier_size(), kUndefined);
  for (ElementId p : f.source->elements()) {
    auto& slot = first[f(p).index()];
    if (slot != kUndefined) {
      report.add({"injective",
                  "phi(" + f.source->element_name(ElementId{slot}) + ") = phi(" + f.source->element_name(p) + ")",
                  {}, {ElementId{slot}, p}});
    } else {
      slot = p.value;
    }
  }
}

}  // namespace

ValidationReport is_embedding(const SFunction& f) {
  ValidationReport report;
  check_injective(f, report);
  report.merge(is_s_function(f));
  const PartialAction& x = *f.source;
  const PartialAction& y = *f.target;
  const auto& isg = x.structure();
  const Subset image = image_of(f);
  for (ArrowId s : isg.arrows()) {
    const Subset reached = y.map(s).apply(image & y.domain(isg.inverse(s)));
    for (ElementId p : x.elements()) {
      const bool in_pre = reached.contains(f(p));
      if (in_pre != x.domain(s).contains(p))
        report.add({"embedding",
                    "X_" + arrow_name(f, s) + " != phi^-1(theta_" + arrow_name(f, s) + "(phi(X) & Y_" +
                        arrow_name(f, isg.inverse(s)) + ")) at " + x.element_name(p),
                    {s}, {p}});
    }
  }
  return report;
}

ValidationReport is_embedding_pointwise(const SFunction& f) {
  ValidationReport report;
  check_injective(f, report);
  report.merge(is_s_function(f));
  const PartialAction& x = *f.source;
  const PartialAction& y = *f.target;
  const auto& isg = x.structure();
  const Subset image = image_of(f);
  for (ArrowId s : isg.arrows()) {
    const ArrowId s_star = isg.inverse(s);
    for (ElementId p : x.elements()) {
      const ElementId q = f(p);
      std::optional<ElementId> moved;
      if (y.domain(s_star).contains(q)) moved = y.map(s)(q);
      const bool lifts = moved && image.contains(*moved);
      if (x.domain(s_star).contains(p) != lifts) {
        report.add({"embedding",
                    "membership of " + x.element_name(p) + " in X_" + arrow_name(f, s_star) +
                        " is not induced by the target",
                    {s}, {p}});
        continue;
      }
      if (lifts) {
        auto own = x.map(s)(p);
        if (!own || f(*own) != *moved)
          report.add({"embedding", "theta_" + arrow_name(f, s) + " is not induced at " + x.element_name(p), {s}, {p}});
      }
    }
  }
  return report;
}

ValidationReport is_globalization_triple(const SFunction& f) {
  ValidationReport report = is_embedding(f);
  if (!is_global(*f.target)) report.add({"global", "target action is not global", {}, {}});
  return report;
}

SFunction compose(const SFunction& g, const SFunction& f) {
  if (!same_action(f.target, g.source)) throw std::invalid_argument("compose: f.target is not g.source");
  std::vector<ElementId> map;
  map.reserve(f.map.size());
  for (ElementId y : f.map) map.push_back(g(y));
  return make_s_function(f.source, g.target, std::move(map));
}

bool is_isomorphism(const SFunction& f) {
  if (f.source->carrier_size() != f.target->carrier_size()) return false;
  if (!is_injective(f.map, f.target->carrier_size())) return false;
  std::vector<ElementId> inverse(f.map.size());
  for (ElementId p : f.source->elements()) inverse[f(p).index()] = p;
  return s_function_holds(*f.source, *f.target, f.map) && s_function_holds(*f.target, *f.source, inverse);
}

PartialAction transport_restriction(const SFunction& f) {
  if (!is_injective(f.map, f.target->carrier_size()))
    throw std::invalid_argument("transport_restriction needs an injective map");
  const PartialAction restricted = restrict(*f.target, image_of(f), Coverage::kTrim);
  const PartialAction& x = *f.source;
  const auto& isg = x.structure();

  // source element -> index in `restricted`, and back
  std::vector<std::uint32_t> to_r(x.carrier_size(), kUndefined);
  std::vector<std::uint32_t> from_r(restricted.carrier_size(), kUndefined);
  for (ElementId p : x.elements()) {
    if (auto r = restricted.find_element(f.target->element_name(f(p)))) {
      to_r[p.index()] = r->value;
      from_r[r->index()] = p.value;
    }
  }

  std::vector<Subset> domains;
  std::vector<PartialMap> maps;
  for (ArrowId s : isg.arrows()) {
    Subset d(x.carrier_size());
    PartialMap m(x.carrier_size());
    for (ElementId p : x.elements()) {
      if (to_r[p.index()] == kUndefined) continue;
      const ElementId r{to_r[p.index()]};
      if (restricted.domain(s).contains(r)) d.insert(p);
      if (auto q = restricted.map(s)(r)) m.set(p, ElementId{from_r[q->index()]});
    }
    domains.push_back(std::move(d));
    maps.push_back(std::move(m));
  }
  return PartialAction(x.structure_ptr(), x.carrier(), std::move(domains), std::move(maps));
}

std::optional<std::vector<std::vector<ElementId>>> enumerate_factorizations(const SFunction& from,
                                                                            const SFunction& to,
                                                                            std::uint64_t bound) {
  if (from.source != to.source && !(*from.source == *to.source))
    throw std::invalid_argument("enumerate_factorizations: maps have different sources");
  const std::size_t a = from.target->carrier_size();
  const std::size_t b = to.target->carrier_size();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a; ++i) {
    if (b == 0) {
      total = 0;
      break;
    }
    if (total > bound / b) return std::nullopt;
    total *= b;
  }
  if (total > bound) return std::nullopt;

  std::vector<std::vector<ElementId>> found;
  if (total == 0) return found;

  std::vector<ElementId> h(a, ElementId{0u});
  for (std::uint64_t n = 0; n < total; ++n) {
    bool commutes = true;
    for (ElementId p : from.source->elements()) {
      if (h[from(p).index()] != to(p)) {
        commutes = false;
        break;
      }
    }
    if (commutes && s_function_holds(*from.target, *to.target, h)) found.push_back(h);
    for (std::size_t i = 0; i < a; ++i) {  // odometer
      if (++h[i].value < b) break;
      h[i].value = 0;
    }
  }
  return found;
}

GlobalizationTriple GlobalizationTriple::make(SFunction embedding, TargetCheck check) {
  ValidationReport report = check == TargetCheck::kStrict ? isgd::is_embedding(embedding) : is_s_function(embedding);
  const bool global = is_global(*embedding.target);
  if (!global) report.add({"global", "target action is not global", {}, {}});
  if (!report.ok()) {
    std::ostringstream os;
    os << "not a valid mediation target: " << report;
    throw ValidationError(os.str(), report);
  }
  const bool emb = check == TargetCheck::kStrict || isgd::is_embedding(embedding).ok();
  return GlobalizationTriple(std::move(embedding), global, emb);
}

}  // namespace isgd
