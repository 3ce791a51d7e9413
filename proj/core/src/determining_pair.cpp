#include "placefn/determining_pair.hpp"

#include <algorithm>
#include <map>

namespace placefn {

PartialEquivalence::PartialEquivalence(CarrierPtr over, std::vector<std::vector<Elem>> classes)
    : over_(std::move(over)), classes_(std::move(classes)) {
  if (!over_) fail(ErrorCode::malformed_input, "null carrier");
  class_of_.assign(over_->size(), std::nullopt);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty()) fail(ErrorCode::malformed_input, "empty relation class");
    std::sort(classes_[c].begin(), classes_[c].end());
    for (Elem x : classes_[c]) {
      if (!over_->contains(x)) fail(ErrorCode::unknown_element, "class member outside carrier");
      if (class_of_[x]) fail(ErrorCode::malformed_input, "relation classes overlap");
      class_of_[x] = c;
    }
  }
}

std::optional<std::size_t> PartialEquivalence::class_of(Elem x) const {
  if (x >= class_of_.size()) fail(ErrorCode::unknown_element, "class_of");
  return class_of_[x];
}

bool PartialEquivalence::related(Elem x, Elem y) const {
  auto cx = class_of(x);
  return cx && cx == class_of(y);
}

void check_unitary_extension(const MultiSemigroup& base, const UnitaryExtension& ext,
                             bool require_injective_embedding) {
  const MultiSemigroup& ea = ext.algebra;
  const std::size_t n = base.op_count();
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::not_unitary_extension, why);
  };

  if (ea.op_count() != n) bad("operation counts differ");
  if (ext.selectors.size() != n) bad("need one selector per slot");
  for (Elem e : ext.selectors)
    if (e >= ea.size()) bad("selector outside carrier");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ext.selectors[i] == ext.selectors[j]) bad("selectors not distinct");

  if (ext.embedding.size() != base.size()) bad("embedding must cover the base carrier");
  for (Elem x : ext.embedding) {
    if (x >= ea.size()) bad("embedded element outside carrier");
    if (std::find(ext.selectors.begin(), ext.selectors.end(), x) != ext.selectors.end())
      bad("base image meets the selectors");
  }
  if (require_injective_embedding)
    for (std::size_t i = 0; i < ext.embedding.size(); ++i)
      for (std::size_t j = i + 1; j < ext.embedding.size(); ++j)
        if (ext.embedding[i] == ext.embedding[j]) bad("embedding not injective");

  // The base operations are the restriction of the extension's.
  for (std::size_t pos = 1; pos <= n; ++pos)
    for (std::size_t x = 0; x < base.size(); ++x)
      for (std::size_t y = 0; y < base.size(); ++y)
        if (ea.apply(pos, ext.embedding[x], ext.embedding[y]) !=
            ext.embedding[base.apply(pos, static_cast<Elem>(x), static_cast<Elem>(y))])
          bad("base operations do not restrict");

  // Selector laws.
  for (std::size_t i = 1; i <= n; ++i) {
    const Elem ei = ext.selectors[i - 1];
    for (std::size_t g = 0; g < ea.size(); ++g) {
      const Elem ge = static_cast<Elem>(g);
      if (ea.apply(i, ge, ei) != ge || ea.apply(i, ei, ge) != ge)
        bad("selector " + std::to_string(i) + " is not neutral at its own slot");
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == i) continue;
        const Elem ek = ext.selectors[k - 1];
        if (ea.apply(i, ek, ge) != ek)
          bad("selector " + std::to_string(k) + " not absorbing under slot " + std::to_string(i));
      }
    }
  }

  // Base image plus selectors generate everything.
  std::vector<bool> reached(ea.size(), false);
  std::vector<Elem> work;
  auto visit = [&](Elem x) {
    if (!reached[x]) {
      reached[x] = true;
      work.push_back(x);
    }
  };
  for (Elem x : ext.embedding) visit(x);
  for (Elem e : ext.selectors) visit(e);
  for (std::size_t head = 0; head < work.size(); ++head)
    for (std::size_t pos = 1; pos <= n; ++pos)
      for (std::size_t j = 0; j <= head; ++j) {
        visit(ea.apply(pos, work[head], work[j]));
        visit(ea.apply(pos, work[j], work[head]));
      }
  for (std::size_t x = 0; x < ea.size(); ++x)
    if (!reached[x]) bad("carrier not generated by the base image and selectors");
}

namespace {

std::string name_of(const Carrier& c, Elem x) { return c.name(x); }

std::string state_str(const MuTuple& t, const Carrier& c) { return to_string(t, c); }

}  // namespace

DeterminingPairReport validate_determining_pair(const MultiSemigroup& base,
                                                const DeterminingPair& dp, std::size_t cap) {
  check_unitary_extension(base, dp.extension);
  const MultiSemigroup& ea = dp.extension.algebra;
  const Carrier& ec = *ea.carrier();
  if (!same_carrier(dp.classes.over(), ea.carrier()))
    fail(ErrorCode::carrier_mismatch, "relation must live on the extension carrier");
  for (Elem x : dp.exceptional)
    if (x >= ea.size()) fail(ErrorCode::unknown_element, "exceptional member outside carrier");

  DeterminingPairReport report;
  const std::size_t n = ea.op_count();

  // 1) base image and selectors in the relation domain.
  for (Elem x : dp.extension.embedding)
    if (!dp.classes.in_domain(x)) {
      report.axiom[0] = {false, "base element " + name_of(ec, x) + " outside the domain"};
      break;
    }
  if (report.axiom[0].holds)
    for (Elem e : dp.extension.selectors)
      if (!dp.classes.in_domain(e)) {
        report.axiom[0] = {false, "selector " + name_of(ec, e) + " outside the domain"};
        break;
      }

  // 2) no selector is exceptional.
  for (Elem e : dp.extension.selectors)
    if (std::count(dp.exceptional.begin(), dp.exceptional.end(), e)) {
      report.axiom[1] = {false, "selector " + name_of(ec, e) + " lies in W"};
      break;
    }

  ActionClosureOptions opts;
  opts.seeds = dp.extension.embedding;
  opts.cap = cap;
  const std::vector<PairState> states = action_closure(ea, opts);

  // 3) chains whose residual classes are the selector classes fix every seed.
  for (const PairState& s : states) {
    if (!report.axiom[2].holds) break;
    bool premise = true;
    for (std::size_t i = 0; i < n && premise; ++i) {
      const Elem ei = dp.extension.selectors[i];
      premise = s.tuple.is_selector(i) ? dp.classes.in_domain(ei)
                                       : dp.classes.related(ei, s.tuple.element(i));
    }
    if (!premise) continue;
    for (std::size_t g = 0; g < base.size(); ++g) {
      const Elem gg = dp.extension.embedding[g];
      if (!dp.classes.related(gg, s.action[g])) {
        report.axiom[2] = {false, "seed " + name_of(ec, gg) + " not equivalent to " +
                                      name_of(ec, s.action[g]) + " after chain with state " +
                                      state_str(s.tuple, ec)};
        break;
      }
    }
  }

  // 4) classwise-equal residual tuples give equivalent composites.  Both
  // tuples range over the base image plus untouched slots: a state whose
  // residual strays outside the base image is not quantified (the annotated
  // form of the axiom, applied to both sides).
  std::vector<bool> in_base(ea.size(), false);
  for (Elem x : dp.extension.embedding) in_base[x] = true;
  auto base_shaped = [&](const MuTuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!t.is_selector(i) && !in_base[t.element(i)]) return false;
    return true;
  };
  for (std::size_t a = 0; a < states.size() && report.axiom[3].holds; ++a) {
    if (!base_shaped(states[a].tuple)) continue;
    for (std::size_t b = 0; b < states.size(); ++b) {
      const PairState& u = states[a];
      const PairState& v = states[b];
      if (!base_shaped(v.tuple)) continue;
      bool premise = u.tuple.size() == v.tuple.size();
      for (std::size_t i = 0; i < n && premise; ++i) {
        if (u.tuple.is_selector(i) != v.tuple.is_selector(i)) premise = false;
        else if (!u.tuple.is_selector(i) &&
                 !dp.classes.related(u.tuple.element(i), v.tuple.element(i)))
          premise = false;
      }
      if (!premise) continue;
      for (std::size_t g = 0; g < base.size(); ++g)
        if (!dp.classes.related(u.action[g], v.action[g])) {
          report.axiom[3] = {false,
                             "states " + state_str(u.tuple, ec) + " and " + state_str(v.tuple, ec) +
                                 " are classwise equal but results " + name_of(ec, u.action[g]) +
                                 " / " + name_of(ec, v.action[g]) + " are not equivalent"};
          break;
        }
      if (!report.axiom[3].holds) break;
    }
  }

  // 5) W, when nonempty, is a class whose base part is an l-ideal.
  if (!dp.exceptional.empty()) {
    std::vector<Elem> w = dp.exceptional;
    std::sort(w.begin(), w.end());
    bool is_class = false;
    for (const auto& cls : dp.classes.classes())
      if (cls == w) { is_class = true; break; }
    if (!is_class) {
      report.axiom[4] = {false, "W is not a class of the relation"};
    } else {
      std::set<Elem> base_part;
      for (std::size_t g = 0; g < base.size(); ++g)
        if (std::count(w.begin(), w.end(), dp.extension.embedding[g]))
          base_part.insert(static_cast<Elem>(g));
      if (base_part.empty()) {
        report.axiom[4] = {false, "W does not meet the base image"};
      } else {
        LIdealCheck li = is_l_ideal(base_part, base);
        if (!li.holds) {
          const LIdealWitness& wit = *li.witness;
          report.axiom[4] = {false, "W's base part is not an l-ideal: seed " +
                                        base.carrier()->name(wit.g) + ", state " +
                                        to_string(wit.state, *base.carrier()) + ", result " +
                                        base.carrier()->name(wit.result) + " escapes"};
        }
      }
    }
  }

  return report;
}

std::optional<Elem> ClassIndexing::point_of(std::size_t class_id) const {
  for (std::size_t p = 0; p < class_of.size(); ++p)
    if (class_of[p] && *class_of[p] == class_id) return static_cast<Elem>(p);
  return std::nullopt;
}

ClassIndexing default_indexing(const MultiSemigroup& base, const DeterminingPair& dp) {
  const Carrier& ec = *dp.extension.algebra.carrier();
  std::vector<Elem> marked = dp.extension.embedding;
  marked.insert(marked.end(), dp.extension.selectors.begin(), dp.extension.selectors.end());
  std::vector<Elem> w = dp.exceptional;
  std::sort(w.begin(), w.end());

  std::vector<std::string> names;
  std::vector<std::optional<std::size_t>> ids;
  for (std::size_t c = 0; c < dp.classes.class_count(); ++c) {
    const auto& members = dp.classes.class_members(c);
    if (members == w) continue;
    bool meets = false;
    for (Elem m : members)
      if (std::find(marked.begin(), marked.end(), m) != marked.end()) { meets = true; break; }
    if (!meets) continue;
    names.push_back(ec.name(members.front()));
    ids.push_back(c);
  }
  if (names.empty()) fail(ErrorCode::invalid_pair, "no indexable classes");
  return ClassIndexing{make_carrier(std::move(names)), std::move(ids)};
}

Representation simplest_representation(const MultiSemigroup& base, const DeterminingPair& dp,
                                       const ClassIndexing& idx, std::size_t cap) {
  check_unitary_extension(base, dp.extension, /*require_injective_embedding=*/false);
  const MultiSemigroup& ea = dp.extension.algebra;
  const std::size_t n = ea.op_count();
  std::vector<Elem> w = dp.exceptional;
  std::sort(w.begin(), w.end());

  // Indexing must be injective, avoid W, and hit only marked classes.
  std::vector<Elem> marked = dp.extension.embedding;
  marked.insert(marked.end(), dp.extension.selectors.begin(), dp.extension.selectors.end());
  std::map<std::size_t, Elem> point_of;
  for (std::size_t p = 0; p < idx.class_of.size(); ++p) {
    if (!idx.class_of[p]) continue;
    const std::size_t c = *idx.class_of[p];
    if (c >= dp.classes.class_count()) fail(ErrorCode::invalid_pair, "indexed class out of range");
    if (!point_of.emplace(c, static_cast<Elem>(p)).second)
      fail(ErrorCode::invalid_pair, "indexing not injective");
    const auto& members = dp.classes.class_members(c);
    if (members == w) fail(ErrorCode::invalid_pair, "W indexed");
    bool meets = false;
    for (Elem m : members)
      if (std::find(marked.begin(), marked.end(), m) != marked.end()) { meets = true; break; }
    if (!meets) fail(ErrorCode::invalid_pair, "indexed class misses the base image and selectors");
  }

  // Reachable base-operand chain states, grouped by indexed class tuple.
  ActionClosureOptions opts;
  std::vector<Elem> operands = dp.extension.embedding;
  std::sort(operands.begin(), operands.end());
  operands.erase(std::unique(operands.begin(), operands.end()), operands.end());
  opts.operands = std::move(operands);
  opts.seeds = dp.extension.embedding;
  opts.cap = cap;
  const std::vector<PairState> states = action_closure(ea, opts);

  std::map<Tuple, std::vector<const PairState*>> by_point;
  for (const PairState& s : states) {
    Tuple pt = Tuple::filled(n, 0);
    bool indexed = true;
    for (std::size_t i = 0; i < n && indexed; ++i) {
      const Elem member = s.tuple.is_selector(i) ? dp.extension.selectors[i] : s.tuple.element(i);
      auto cls = dp.classes.class_of(member);
      if (!cls) { indexed = false; break; }
      auto it = point_of.find(*cls);
      if (it == point_of.end()) { indexed = false; break; }
      pt.set(i, it->second);
    }
    if (indexed) by_point[pt].push_back(&s);
  }

  std::vector<PlaceFunction> assignment;
  for (std::size_t g = 0; g < base.size(); ++g) {
    std::map<Tuple, Elem> entries;
    for (const auto& [pt, witnesses] : by_point) {
      std::optional<Elem> result;
      for (const PairState* s : witnesses) {
        const Elem value = s->action[g];
        auto cls = dp.classes.class_of(value);
        if (!cls) continue;
        auto it = point_of.find(*cls);
        if (it == point_of.end()) continue;
        if (result && *result != it->second)
          fail(ErrorCode::invalid_pair,
               "conflicting witnesses at point tuple for seed " + base.carrier()->name(
                   static_cast<Elem>(g)));
        result = it->second;
      }
      if (result) entries.emplace(pt, *result);
    }
    assignment.emplace_back(n, idx.points, std::move(entries));
  }
  return Representation(base, idx.points, std::move(assignment));
}

DecomposeResult decompose(const Representation& rep, std::size_t extension_cap) {
  HomomorphismCheck hom = verify_representation(rep);
  if (!hom.ok) fail(ErrorCode::not_a_representation, "input fails the homomorphism law");

  const MultiSemigroup& base = rep.algebra();
  const std::size_t n = base.op_count();
  const std::size_t point_count = rep.points()->size();

  // Full extension of the input plus one projector per slot, closed under
  // composition.  Each closed function becomes an element of the extension
  // algebra; the projectors are the selectors.
  const Representation total = totalize(rep);
  const CarrierPtr a0 = total.points();
  const Elem sentinel = static_cast<Elem>(a0->size() - 1);
  std::vector<PlaceFunction> closed =
      unitary_extension(total.assignment(), n, a0, extension_cap);

  // unitary_extension lists the projectors first.
  std::vector<Elem> selectors(n);
  for (std::size_t i = 0; i < n; ++i) selectors[i] = static_cast<Elem>(i);
  std::vector<Elem> embedding(base.size());
  for (std::size_t g = 0; g < base.size(); ++g) {
    auto it = std::find(closed.begin(), closed.end(), total.of(static_cast<Elem>(g)));
    embedding[g] = static_cast<Elem>(it - closed.begin());
    if (embedding[g] < n)
      fail(ErrorCode::not_unitary_extension, "a base function equals a projector");
  }

  std::vector<std::string> ext_names(closed.size());
  for (std::size_t i = 0; i < n; ++i) ext_names[i] = "e" + std::to_string(i + 1);
  for (std::size_t g = 0; g < base.size(); ++g)
    if (ext_names[embedding[g]].empty())
      ext_names[embedding[g]] = base.carrier()->name(static_cast<Elem>(g));
  for (std::size_t i = 0; i < ext_names.size(); ++i)
    if (ext_names[i].empty()) ext_names[i] = "w" + std::to_string(i);
  CarrierPtr ext_carrier = make_carrier(std::move(ext_names));

  std::map<std::map<Tuple, Elem>, Elem> index_of;
  for (std::size_t i = 0; i < closed.size(); ++i)
    index_of.emplace(closed[i].entries(), static_cast<Elem>(i));
  std::vector<OpTable> tables(n, OpTable(closed.size() * closed.size()));
  for (std::size_t pos = 1; pos <= n; ++pos)
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = 0; j < closed.size(); ++j)
        tables[pos - 1][i * closed.size() + j] =
            index_of.at(mann_compose(closed[i], closed[j], pos).entries());

  UnitaryExtension ext{MultiSemigroup(ext_carrier, std::move(tables)), selectors, embedding};
  check_unitary_extension(base, ext, rep.injective());

  std::vector<Elem> marked = embedding;
  marked.insert(marked.end(), selectors.begin(), selectors.end());

  DecomposeResult out{{}, {}, true, std::nullopt, ext, closed};

  std::vector<std::map<Tuple, Elem>> union_entries(base.size());

  for_each_tuple(point_count, n, [&](const Tuple& pt) {
    // Value classes at this point tuple.  Functions are total on the
    // extended carrier, so every member has a value.
    std::map<Elem, std::vector<Elem>> by_value;
    for (std::size_t i = 0; i < closed.size(); ++i)
      by_value[*closed[i].at(pt)].push_back(static_cast<Elem>(i));

    // Classes meeting the base image or selectors carry the relation; the
    // value class of the sentinel is exceptional only when it does too
    // (otherwise no indexed class can reach it and it is dropped).
    std::vector<std::vector<Elem>> classes;
    std::vector<Elem> w;
    std::vector<std::optional<std::size_t>> class_of_point(point_count, std::nullopt);
    for (const auto& [value, members] : by_value) {
      bool meets = false;
      for (Elem m : members)
        if (std::find(marked.begin(), marked.end(), m) != marked.end()) { meets = true; break; }
      if (!meets) continue;
      if (value == sentinel) w = members;
      else if (value < point_count)
        class_of_point[value] = classes.size();
      classes.push_back(members);
    }

    DeterminingPair dp{ext, PartialEquivalence(ext_carrier, classes), w};
    ClassIndexing idx{rep.points(), class_of_point};
    Representation simplest = simplest_representation(base, dp, idx);

    bool contained = true;
    for (std::size_t g = 0; g < base.size(); ++g) {
      if (!includes(simplest.of(static_cast<Elem>(g)), rep.of(static_cast<Elem>(g))))
        contained = false;
      for (const auto& [t, v] : simplest.of(static_cast<Elem>(g)).entries()) {
        auto [it, fresh] = union_entries[g].emplace(t, v);
        if (!fresh && it->second != v) {
          out.union_matches = false;
          if (!out.mismatch) out.mismatch = static_cast<Elem>(g);
        }
      }
    }
    out.family.push_back(
        PointDecomposition{pt, std::move(dp), std::move(idx), std::move(simplest), contained});
  });

  for (std::size_t g = 0; g < base.size(); ++g) {
    out.union_assignment.emplace_back(n, rep.points(), std::move(union_entries[g]));
    if (!(out.union_assignment.back() == rep.of(static_cast<Elem>(g)))) {
      out.union_matches = false;
      if (!out.mismatch) out.mismatch = static_cast<Elem>(g);
    }
  }
  return out;
}

}  // namespace placefn
