#ifndef PLACEFN_IO_HPP
#define PLACEFN_IO_HPP

#include <optional>
#include <string>

#include "placefn/determining_pair.hpp"
#include "placefn/identities.hpp"
#include "placefn/multi_semigroup.hpp"
#include "placefn/relations.hpp"
#include "placefn/representation.hpp"

namespace placefn {

// File formats (all JSON, schema version 1):
//
// algebra:       { "schema": 1, "n": N, "elements": ["a",...],
//                  "tables": [ [[i,...],[...]], ... ] }
//                tables[i][x][y] = element index of x o_(i+1) y.
//
// function set:  { "schema": 1, "arity": N, "carrier": ["a",...],
//                  "functions": { "f": [ [["a","b"], "c"], ... ], ... } }
//                Duplicate argument tuples within one function are a load
//                error.
//
// representation: a function set with one function per algebra element
//                (keyed by element name) plus an "algebra" object.
//
// relation:      { "pairs": [ ["a","b"], ... ] } over a caller-provided
//                carrier.
//
// determining pair: { "schema": 1,
//                     "extension": algebra + "selectors": ["e1",...]
//                                  (+ optional "embedding": {"g": "x"}),
//                     "classes": [ ["x","y"], ... ], "W": ["x",...] }
//                Base elements resolve into the extension by name unless an
//                embedding map is given.

struct LoadedAlgebra {
  CarrierPtr carrier;
  std::vector<OpTable> tables;
  std::optional<MultiSemigroup> algebra;   // set when associative
  std::optional<AssocFailure> failure;     // set otherwise
};

LoadedAlgebra parse_algebra(const std::string& json_text);
LoadedAlgebra load_algebra_file(const std::string& path);
std::string algebra_to_json(const MultiSemigroup& alg);

struct FunctionSet {
  std::size_t arity;
  CarrierPtr carrier;
  std::vector<NamedFunction> functions;
};

FunctionSet parse_function_set(const std::string& json_text);
FunctionSet load_function_set_file(const std::string& path);
std::string function_set_to_json(const FunctionSet& fs);

Representation parse_representation(const std::string& json_text);
Representation load_representation_file(const std::string& path);
std::string representation_to_json(const Representation& rep);

BinaryRelation parse_relation(const std::string& json_text, CarrierPtr over);
BinaryRelation load_relation_file(const std::string& path, CarrierPtr over);
std::string relation_to_json(const BinaryRelation& rel);

DeterminingPair parse_determining_pair(const std::string& json_text, const MultiSemigroup& base);
DeterminingPair load_pair_file(const std::string& path, const MultiSemigroup& base);
std::string determining_pair_to_json(const DeterminingPair& dp, const MultiSemigroup& base);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace placefn

#endif  // PLACEFN_IO_HPP
