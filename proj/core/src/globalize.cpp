#include "isgd/globalize.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isgd/errors.hpp"
#include "union_find.hpp"

namespace isgd {

Quotient::Quotient(std::vector<Seed> seeds, std::size_t arrow_count, std::size_t carrier_size,
                   const std::vector<std::size_t>& root_of_seed)
    : seeds_(std::move(seeds)),
      carrier_size_(carrier_size),
      seed_slot_(arrow_count * carrier_size, kUndefined) {
  if (root_of_seed.size() != seeds_.size()) throw std::invalid_argument("quotient: one root per seed expected");
  if (!std::is_sorted(seeds_.begin(), seeds_.end())) throw std::invalid_argument("quotient: seeds must be sorted");
  std::vector<std::uint32_t> class_of_root(seeds_.size(), kUndefined);
  class_of_.resize(seeds_.size());
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    seed_slot_.at(slot(seeds_[i])) = static_cast<std::uint32_t>(i);
    auto& c = class_of_root.at(root_of_seed[i]);
    if (c == kUndefined) {
      c = static_cast<std::uint32_t>(representative_.size());
      representative_.push_back(i);
      members_.emplace_back();
    }
    class_of_[i] = ElementId{c};
    members_[c].push_back(seeds_[i]);
  }
}

bool Quotient::contains(Seed p) const {
  if (p.point.index() >= carrier_size_) return false;
  const std::size_t k = slot(p);
  return k < seed_slot_.size() && seed_slot_[k] != kUndefined;
}

ElementId Quotient::class_of(Seed p) const {
  if (!contains(p)) throw std::out_of_range("not a seed");
  return class_of_[seed_slot_[slot(p)]];
}

Quotient Quotient::renumbered(const std::vector<ElementId>& leading) const {
  std::vector<std::uint32_t> new_of_old(class_count(), kUndefined);
  std::uint32_t next = 0;
  for (ElementId c : leading)
    if (new_of_old.at(c.index()) == kUndefined) new_of_old[c.index()] = next++;
  for (auto& n : new_of_old)
    if (n == kUndefined) n = next++;
  Quotient out = *this;
  for (std::size_t i = 0; i < seeds_.size(); ++i) out.class_of_[i] = ElementId{new_of_old[class_of_[i].index()]};
  for (std::size_t c = 0; c < class_count(); ++c) {
    out.representative_[new_of_old[c]] = representative_[c];
    out.members_[new_of_old[c]] = members_[c];
  }
  return out;
}

std::vector<Seed> build_seed_set(const PartialAction& action) {
  const auto& isg = action.structure();
  std::vector<Seed> seeds;
  for (ArrowId s : isg.arrows()) {
    const Subset& dom = action.domain(isg.mul(isg.inverse(s), s));
    for (ElementId x : dom.elements()) seeds.push_back({s, x});
  }
  return seeds;
}

bool tilde(const PartialAction& action, Seed p, Seed q) {
  const auto& isg = action.structure();
  const ArrowId s = p.arrow;
  const ArrowId t = q.arrow;
  if (isg.composable(isg.inverse(t), s)) {
    const ArrowId s_star_t = isg.mul(isg.inverse(s), t);
    const ArrowId t_star_s = isg.mul(isg.inverse(t), s);
    if (action.domain(s_star_t).contains(p.point) && action.map(t_star_s)(p.point) == q.point) return true;
  }
  return isg.is_idempotent(s) && isg.is_idempotent(t) && p.point == q.point;
}

Quotient close_equivalence(const std::vector<Seed>& seeds, const PartialAction& action) {
  detail::UnionFind sets(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i + 1; j < seeds.size(); ++j)
      if (tilde(action, seeds[i], seeds[j])) sets.unite(i, j);
  std::vector<std::size_t> roots(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) roots[i] = sets.find(i);
  return Quotient(seeds, action.structure().size(), action.carrier_size(), roots);
}

std::vector<Seed> seed_domain(const PartialAction& action, ArrowId s) {
  const auto& isg = action.structure();
  std::vector<Seed> out;
  for (const Seed& p : build_seed_set(action)) {
    if (!isg.composable(s, p.arrow)) continue;
    const ArrowId sp = isg.mul(s, p.arrow);
    if (action.domain(isg.mul(isg.inverse(sp), sp)).contains(p.point)) out.push_back(p);
  }
  return out;
}

std::string class_label(ElementId c) { return "e" + std::to_string(c.index() + 1); }

Globalization build_globalization(const ActionPtr& action) {
  if (!action) throw std::invalid_argument("build_globalization: null action");
  {
    ValidationReport report = validate_p_axioms(*action);
    if (!report.ok()) {
      std::ostringstream os;
      os << "input is not a partial action: " << report;
      throw ValidationError(os.str(), report);
    }
  }
  const auto& isg = action->structure();
  Quotient quotient = close_equivalence(build_seed_set(*action), *action);
  const std::size_t n = quotient.class_count();

  // i(x) = [e, x] for the first idempotent e with x in X_e. Classes met by i
  // are numbered first, in carrier order, so i(k) is the k-th label.
  const auto idem = idempotents(isg);
  std::vector<ElementId> embed;
  for (ElementId x : action->elements()) {
    auto e = std::find_if(idem.begin(), idem.end(), [&](ArrowId f) { return action->domain(f).contains(x); });
    embed.push_back(quotient.class_of({*e, x}));  // validated input covers every point
  }
  quotient = quotient.renumbered(embed);
  for (ElementId x : action->elements()) {
    auto e = std::find_if(idem.begin(), idem.end(), [&](ArrowId f) { return action->domain(f).contains(x); });
    embed[x.index()] = quotient.class_of({*e, x});
  }

  auto show = [&](Seed p) {
    return "(" + isg.name(p.arrow) + "," + action->element_name(p.point) + ")";
  };

  std::vector<Subset> families(isg.size(), Subset(n));
  std::vector<PartialMap> eta(isg.size(), PartialMap(n));
  for (ArrowId s : isg.arrows()) {
    for (const Seed& p : seed_domain(*action, s)) {
      const Seed moved{isg.mul(s, p.arrow), p.point};
      if (!quotient.contains(moved))
        throw WellDefinednessError("zeta_" + isg.name(s) + " leaves D at " + show(p));
      const ElementId from = quotient.class_of(p);
      const ElementId to = quotient.class_of(moved);
      if (auto prior = eta[s.index()](from); prior && *prior != to)
        throw WellDefinednessError("eta_" + isg.name(s) + " depends on the representative of " +
                                   show(quotient.representative(from)) + " (at " + show(p) + ")");
      eta[s.index()].set(from, to);
      families[isg.inverse(s).index()].insert(from);
    }
  }

  std::vector<std::string> labels;
  for (std::size_t c = 0; c < n; ++c) labels.push_back(class_label(ElementId{c}));
  auto global = std::make_shared<const PartialAction>(action->structure_ptr(), std::move(labels),
                                                      std::move(families), std::move(eta));

  SFunction i = make_s_function(action, global, std::move(embed));
  return Globalization{action, std::move(quotient), std::move(global), std::move(i)};
}

SFunction mediating(const Globalization& glob, const GlobalizationTriple& target) {
  const SFunction& j = target.embedding();
  if (j.source != glob.input && !(*j.source == *glob.input))
    throw std::invalid_argument("mediating: target is over a different action");
  const PartialAction& z = *j.target;
  const auto& isg = glob.input->structure();
  const std::size_t n = glob.quotient.class_count();

  std::vector<std::uint32_t> sigma(n, kUndefined);
  std::vector<Seed> witness(n);
  for (const Seed& p : glob.quotient.seeds()) {
    const ElementId c = glob.quotient.class_of(p);
    const ElementId jx = j(p.point);
    std::optional<ElementId> value;
    if (z.domain(isg.inverse(p.arrow)).contains(jx)) value = z.map(p.arrow)(jx);
    auto show = [&](Seed q) {
      return "(" + isg.name(q.arrow) + "," + glob.input->element_name(q.point) + ")";
    };
    if (!value) throw WellDefinednessError("omega_" + isg.name(p.arrow) + " undefined at j(x) for seed " + show(p));
    if (sigma[c.index()] == kUndefined) {
      sigma[c.index()] = value->value;
      witness[c.index()] = p;
    } else if (sigma[c.index()] != value->value) {
      throw WellDefinednessError("sigma disagrees on " + show(witness[c.index()]) + " and " + show(p));
    }
  }
  std::vector<ElementId> map;
  for (std::uint32_t v : sigma) map.emplace_back(v);
  return make_s_function(glob.global_action, j.target, std::move(map));
}

ValidationReport verify_universal(const Globalization& glob, const GlobalizationTriple& target,
                                  const SFunction& sigma, std::uint64_t exhaustive_bound) {
  ValidationReport report = is_s_function(sigma);
  const SFunction& j = target.embedding();
  const SFunction through = compose(sigma, glob.canonical_embedding);
  for (ElementId x : glob.input->elements()) {
    if (through(x) != j(x))
      report.add({"commutes", "sigma(i(" + glob.input->element_name(x) + ")) != j(" + glob.input->element_name(x) + ")",
                  {}, {x}});
  }
  auto all = enumerate_factorizations(glob.canonical_embedding, j, exhaustive_bound);
  if (!all) {
    report.note("uniqueness skipped (bound)");
  } else if (all->size() != 1) {
    report.add({"unique", std::to_string(all->size()) + " S-functions factor j through i", {}, {}});
  } else if (all->front() != sigma.map) {
    report.add({"unique", "the only factorization of j through i differs from sigma", {}, {}});
  } else {
    report.note("uniqueness confirmed by exhaustive enumeration");
  }
  return report;
}

std::vector<ElementId> fiber_classes(const Globalization& glob, ObjectId u) {
  const auto& isg = glob.input->structure();
  if (u.index() >= isg.table().object_count()) throw std::out_of_range("unknown object");
  std::set<ElementId> out;
  for (const Seed& p : glob.quotient.seeds())
    if (isg.cod(p.arrow) == u) out.insert(glob.quotient.class_of(p));
  return {out.begin(), out.end()};
}

ValidationReport check_fiber_injectivity(const SFunction& sigma, const Globalization& glob) {
  ValidationReport report;
  const auto& table = glob.input->structure().table();
  for (ObjectId u : table.objects()) {
    std::vector<std::uint32_t> first(sigma.target->carrier_size(), kUndefined);
    for (ElementId c : fiber_classes(glob, u)) {
      auto& slot = first[sigma(c).index()];
      if (slot != kUndefined) {
        report.add({"fiber-injective",
                    "sigma(" + class_label(ElementId{slot}) + ") = sigma(" + class_label(c) + ") in fiber of " +
                        table.object_name(u),
                    {}, {ElementId{slot}, c}});
      } else {
        slot = c.value;
      }
    }
  }
  return report;
}

ValidationReport audit_closure_lemmas(const PartialAction& action, const Quotient& quotient) {
  const auto& isg = action.structure();
  ValidationReport report;
  auto show = [&](Seed p) { return "(" + isg.name(p.arrow) + "," + action.element_name(p.point) + ")"; };
  auto in_seed_set = [&](ArrowId r, ElementId x) {
    return action.domain(isg.mul(isg.inverse(r), r)).contains(x);
  };

  for (std::size_t c = 0; c < quotient.class_count(); ++c) {
    const auto& members = quotient.members(ElementId{c});
    for (const Seed& p : members) {
      for (const Seed& q : members) {
        const ArrowId s = p.arrow, t = q.arrow;
        const ElementId x = p.point, y = q.point;

        const bool x_in = action.domain(isg.inverse(s)).contains(x);
        const bool y_in = action.domain(isg.inverse(t)).contains(y);
        if (x_in != y_in) {
          report.add({"evaluation", "membership differs for " + show(p) + " ~~ " + show(q), {s, t}, {x, y}});
        } else if (x_in && action.map(s)(x) != action.map(t)(y)) {
          report.add({"evaluation", "theta values differ for " + show(p) + " ~~ " + show(q), {s, t}, {x, y}});
        }

        for (ArrowId r : isg.arrows()) {
          if (!isg.composable(r, s) || !isg.composable(r, t)) continue;
          const ArrowId rs = isg.mul(r, s), rt = isg.mul(r, t);
          const bool left = in_seed_set(rs, x);
          const bool right = in_seed_set(rt, y);
          if (left != right) {
            report.add({"translation", "multiplying " + show(p) + " ~~ " + show(q) + " by " + isg.name(r) +
                                           " leaves D on one side only",
                        {r, s, t}, {x, y}});
          } else if (left && quotient.class_of({rs, x}) != quotient.class_of({rt, y})) {
            report.add({"translation", "multiplying " + show(p) + " ~~ " + show(q) + " by " + isg.name(r) +
                                           " separates the classes",
                        {r, s, t}, {x, y}});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace isgd
