#include "placefn/quasi_order.hpp"

#include <algorithm>
#include <set>

namespace placefn {

BinaryRelation chi_of(const Representation& r) {
  const std::size_t k = r.algebra().size();
  std::vector<std::set<Tuple>> doms;
  doms.reserve(k);
  for (std::size_t g = 0; g < k; ++g) doms.push_back(domain(r.of(static_cast<Elem>(g))));

  std::set<std::pair<Elem, Elem>> pairs;
  for (std::size_t g1 = 0; g1 < k; ++g1)
    for (std::size_t g2 = 0; g2 < k; ++g2) {
      if (std::includes(doms[g2].begin(), doms[g2].end(), doms[g1].begin(), doms[g1].end()))
        pairs.emplace(static_cast<Elem>(g1), static_cast<Elem>(g2));
    }
  BinaryRelation chi(r.algebra().carrier(), std::move(pairs));
  if (!chi.is_quasi_order()) fail(ErrorCode::system_check_failed, "chi must be a quasi-order");
  return chi;
}

BinaryRelation epsilon_of(const Representation& r) {
  const std::size_t k = r.algebra().size();
  std::set<std::pair<Elem, Elem>> pairs;
  for (std::size_t g1 = 0; g1 < k; ++g1)
    for (std::size_t g2 = 0; g2 < k; ++g2)
      if (r.of(static_cast<Elem>(g1)) == r.of(static_cast<Elem>(g2)))
        pairs.emplace(static_cast<Elem>(g1), static_cast<Elem>(g2));
  return BinaryRelation(r.algebra().carrier(), std::move(pairs));
}

Representation sum_representations(std::span<const Representation> members, bool tag_points) {
  if (members.empty()) fail(ErrorCode::malformed_input, "empty family");
  const MultiSemigroup& alg = members[0].algebra();
  const std::size_t n = alg.op_count();
  for (const Representation& m : members)
    if (!(m.algebra() == alg)) fail(ErrorCode::carrier_mismatch, "members over different algebras");

  std::vector<std::string> names;
  std::vector<Elem> offset(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    offset[k] = static_cast<Elem>(names.size());
    for (const std::string& p : members[k].points()->names()) {
      std::string name = tag_points ? std::to_string(k) + ":" + p : p;
      names.push_back(std::move(name));
    }
  }
  if (!tag_points) {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorCode::carriers_not_disjoint, "point carriers overlap");
  }
  CarrierPtr points = make_carrier(std::move(names));

  std::vector<PlaceFunction> assignment;
  for (std::size_t g = 0; g < alg.size(); ++g) {
    std::map<Tuple, Elem> entries;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const auto& [t, v] : members[k].of(static_cast<Elem>(g)).entries()) {
        Tuple shifted = t;
        for (std::size_t i = 0; i < n; ++i)
          shifted.set(i, static_cast<Elem>(t[i] + offset[k]));
        entries.emplace(shifted, static_cast<Elem>(v + offset[k]));
      }
    }
    assignment.emplace_back(n, points, std::move(entries));
  }
  return Representation(alg, points, std::move(assignment));
}

UnionOutcome union_representations(std::span<const Representation> members) {
  if (members.empty()) fail(ErrorCode::malformed_input, "empty family");
  const MultiSemigroup& alg = members[0].algebra();
  const CarrierPtr points = members[0].points();
  for (const Representation& m : members) {
    if (!(m.algebra() == alg)) fail(ErrorCode::carrier_mismatch, "members over different algebras");
    if (!same_carrier(m.points(), points))
      fail(ErrorCode::carrier_mismatch, "union needs one shared point carrier");
  }

  UnionOutcome out;
  std::vector<std::map<Tuple, Elem>> entries(alg.size());
  for (const Representation& m : members)
    for (std::size_t g = 0; g < alg.size(); ++g)
      for (const auto& [t, v] : m.of(static_cast<Elem>(g)).entries()) {
        auto [it, fresh] = entries[g].emplace(t, v);
        if (!fresh && it->second != v) {
          out.conflict = std::make_tuple(static_cast<Elem>(g), t, it->second, v);
          return out;
        }
      }

  out.is_function = true;
  for (std::size_t g = 0; g < alg.size(); ++g)
    out.assignment.emplace_back(alg.op_count(), points, std::move(entries[g]));
  Representation joined(alg, points, out.assignment);
  out.hom = verify_representation(joined);
  out.is_representation = out.hom.ok;
  return out;
}

ProjectionSystemReport check_projection_system(const MultiSemigroup& alg,
                                               const BinaryRelation& chi, std::size_t cap) {
  if (!same_carrier(chi.over(), alg.carrier()))
    fail(ErrorCode::carrier_mismatch, "check_projection_system");

  ProjectionSystemReport report;
  ClosureResult c = closure(alg, cap);
  report.closed_condition = c.closed();
  report.violation = c.violation;

  report.quasi_order = true;
  if (!chi.reflexive()) {
    report.quasi_order = false;
    report.quasi_order_witness = "not reflexive";
  } else if (!chi.transitive()) {
    report.quasi_order = false;
    report.quasi_order_witness = "not transitive";
  }

  report.l_regular = is_l_regular(chi, alg);
  report.v_negative = is_v_negative(chi, alg);
  return report;
}

Representation build_Pa(const MultiSemigroup& alg, const BinaryRelation& chi, Elem a,
                        std::size_t cap) {
  if (a >= alg.size()) fail(ErrorCode::unknown_element, "build_Pa");
  ProjectionSystemReport sys = check_projection_system(alg, chi, cap);
  if (!sys.all_pass()) fail(ErrorCode::system_check_failed, "projection system conditions fail");

  ClosureResult c = closure(alg, cap);
  const ClosureAutomaton& automaton = *c.automaton;
  const std::size_t n = alg.op_count();
  const std::size_t k = alg.size();

  std::vector<std::string> names = alg.carrier()->names();
  for (std::string& s : selector_names(n, names)) names.push_back(std::move(s));
  CarrierPtr points = make_carrier(std::move(names));
  std::vector<Elem> marker_ids(n);
  for (std::size_t i = 0; i < n; ++i) marker_ids[i] = static_cast<Elem>(k + i);

  std::vector<PlaceFunction> assignment;
  for (std::size_t g = 0; g < k; ++g) {
    std::map<Tuple, Elem> entries;
    for (const StateRecord& s : automaton.states()) {
      const Elem result = s.action[g];
      if (chi.contains(a, result)) entries.emplace(s.tuple.render(marker_ids), result);
    }
    assignment.emplace_back(n, points, std::move(entries));
  }
  return Representation(alg, points, std::move(assignment));
}

ProjectionRepresentation build_projection_representation(const MultiSemigroup& alg,
                                                         const BinaryRelation& chi,
                                                         std::size_t cap) {
  ProjectionSystemReport sys = check_projection_system(alg, chi, cap);
  if (!sys.all_pass()) fail(ErrorCode::system_check_failed, "projection system conditions fail");

  std::vector<Representation> members;
  members.push_back(totalize(faithful_representation(alg, cap)));
  for (std::size_t a = 0; a < alg.size(); ++a)
    members.push_back(build_Pa(alg, chi, static_cast<Elem>(a), cap));

  Representation sum = sum_representations(members);
  BinaryRelation chi_rep = chi_of(sum);
  BinaryRelation eps = epsilon_of(sum);
  const bool chi_matches = chi_rep == chi;
  const bool faithful = eps == BinaryRelation::diagonal(alg.carrier());
  return ProjectionRepresentation{std::move(sum), std::move(chi_rep), std::move(eps), chi_matches,
                                  faithful};
}

}  // namespace placefn
