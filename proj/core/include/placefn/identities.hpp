#ifndef PLACEFN_IDENTITIES_HPP
#define PLACEFN_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "placefn/mann.hpp"

namespace placefn {

// Composition laws checked by evaluating both sides on sampled functions.
// EQ6 and EQ12 tie the two composition styles together; EQ13 is the
// residual-determines-result law for functions.
enum class IdentityId {
  eq4,   // f[I1..In] = f
  eq5,   // Ii[g1..gn] = gi restricted to the common domain of g1..gn
  eq6,   // f o_i g = f[I1..I(i-1) g I(i+1)..In]
  eq7,   // f[g1..gn][h1..hn] = f[g1[h1..hn] .. gn[h1..hn]]
  eq8,   // (f o_i g)[h1..hn] = f[h1..h(i-1) g[h1..hn] h(i+1)..hn]
  eq9,   // f[g1..gn] o_i h = f[(g1 o_i h)..(gn o_i h)]
  eq10,  // g o_i Ii = Ii o_i g = g
  eq11,  // Ik o_i g = Ik restricted to dom g (k != i)
  eq12,  // f o_{i1} g1 .. o_{is} gs = f[(I1 o_.. g1^s) .. (In o_.. g1^s)]
  eq13,  // equal residual tuples imply equal composites
};

std::string to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(const std::string& s);
std::span<const IdentityId> all_identities();

struct NamedFunction {
  std::string name;
  PlaceFunction fn;
};

struct IdentityFailure {
  std::vector<std::string> functions;  // instance assignment, outermost first
  std::string detail;                  // where the two sides differ
};

struct IdentityReport {
  IdentityId id;
  std::uint64_t samples_checked = 0;
  std::vector<IdentityFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct IdentityCheckOptions {
  // Exhaustive instance enumeration when the full combination count fits the
  // evaluation budget; otherwise `random_assignments` seeded draws.
  // An instance of an identity needing m functions costs about |A|^n point
  // evaluations per composition, so the budget is compared against
  // (#combinations) * |A|^n.
  bool exhaustive = true;
  std::uint64_t max_evaluations = 10'000'000;
  std::uint64_t random_assignments = 1000;
  std::uint64_t seed = 0x5EED;
  std::size_t chain_length = 4;        // EQ12 random chain bound
  std::size_t enumeration_length = 3;  // EQ13 chain enumeration bound
  std::size_t operand_pool = 8;        // EQ13 cap on distinct chain operands
};

IdentityReport verify_identity(IdentityId id, std::span<const NamedFunction> samples,
                               const IdentityCheckOptions& opts = {});

std::vector<IdentityReport> verify_all_identities(std::span<const NamedFunction> samples,
                                                  const IdentityCheckOptions& opts = {});

// Every total function on the carrier, named t0, t1, ... in value order.
// Refused (TooLarge) above `limit` functions.
std::vector<NamedFunction> all_total_functions(CarrierPtr carrier, std::size_t arity,
                                               std::size_t limit = 1u << 20);

// Seeded random partial functions (each point defined with probability 1/2).
std::vector<NamedFunction> random_partial_functions(CarrierPtr carrier, std::size_t arity,
                                                    std::size_t count, std::uint64_t seed);

}  // namespace placefn

#endif  // PLACEFN_IDENTITIES_HPP
