#include "placefn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace placefn {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::malformed_input, "invalid JSON");
  return j;
}

CarrierPtr carrier_from(const json& names, const char* key) {
  if (!names.is_array() || names.empty())
    fail(ErrorCode::malformed_input, std::string(key) + " must be a nonempty array");
  std::vector<std::string> out;
  for (const json& e : names) {
    if (!e.is_string()) fail(ErrorCode::malformed_input, std::string(key) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return make_carrier(std::move(out));
}

Tuple tuple_from(const json& args, const Carrier& carrier, std::size_t arity) {
  if (!args.is_array() || args.size() != arity)
    fail(ErrorCode::malformed_tuple, "argument list of wrong length");
  Tuple t = Tuple::filled(arity, 0);
  for (std::size_t i = 0; i < arity; ++i) {
    if (!args[i].is_string()) fail(ErrorCode::malformed_tuple, "arguments must be element names");
    t.set(i, carrier.require(args[i].get<std::string>()));
  }
  return t;
}

json tuple_to(const Tuple& t, const Carrier& carrier) {
  json a = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) a.push_back(carrier.name(t[i]));
  return a;
}

PlaceFunction function_from(const json& entries, std::size_t arity, const CarrierPtr& carrier,
                            const std::string& name) {
  if (!entries.is_array())
    fail(ErrorCode::malformed_input, "function '" + name + "' must be an entry array");
  std::map<Tuple, Elem> out;
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2)
      fail(ErrorCode::malformed_input, "entries are [args, value] pairs in '" + name + "'");
    Tuple t = tuple_from(e[0], *carrier, arity);
    if (!e[1].is_string()) fail(ErrorCode::malformed_input, "values must be element names");
    const Elem v = carrier->require(e[1].get<std::string>());
    if (!out.emplace(t, v).second)
      fail(ErrorCode::malformed_input, "duplicate argument tuple in function '" + name + "'");
  }
  return PlaceFunction(arity, carrier, std::move(out));
}

json function_to(const PlaceFunction& f) {
  json entries = json::array();
  for (const auto& [t, v] : f.entries())
    entries.push_back(json::array({tuple_to(t, *f.carrier()), f.carrier()->name(v)}));
  return entries;
}

std::vector<OpTable> tables_from(const json& j, std::size_t n, std::size_t k) {
  if (!j.is_array() || j.size() != n) fail(ErrorCode::malformed_table, "need one table per operation");
  std::vector<OpTable> tables;
  for (const json& tj : j) {
    if (!tj.is_array() || tj.size() != k) fail(ErrorCode::malformed_table, "table must have |G| rows");
    OpTable t(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      if (!tj[x].is_array() || tj[x].size() != k)
        fail(ErrorCode::malformed_table, "table row must have |G| entries");
      for (std::size_t y = 0; y < k; ++y) {
        if (!tj[x][y].is_number_unsigned() || tj[x][y].get<std::size_t>() >= k)
          fail(ErrorCode::malformed_table, "table entries are element indices");
        t[x * k + y] = static_cast<Elem>(tj[x][y].get<std::size_t>());
      }
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

json tables_to(const MultiSemigroup& alg) {
  const std::size_t k = alg.size();
  json out = json::array();
  for (const OpTable& t : alg.tables()) {
    json tj = json::array();
    for (std::size_t x = 0; x < k; ++x) {
      json row = json::array();
      for (std::size_t y = 0; y < k; ++y) row.push_back(static_cast<std::size_t>(t[x * k + y]));
      tj.push_back(std::move(row));
    }
    out.push_back(std::move(tj));
  }
  return out;
}

LoadedAlgebra algebra_from(const json& j) {
  if (!j.is_object()) fail(ErrorCode::malformed_input, "algebra must be an object");
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    fail(ErrorCode::malformed_input, "algebra needs an operation count \"n\"");
  const std::size_t n = j["n"].get<std::size_t>();
  if (n == 0 || n > kMaxArity) fail(ErrorCode::malformed_input, "n must be in 1..8");
  if (!j.contains("elements")) fail(ErrorCode::malformed_input, "algebra needs \"elements\"");
  CarrierPtr carrier = carrier_from(j["elements"], "elements");
  if (!j.contains("tables")) fail(ErrorCode::malformed_input, "algebra needs \"tables\"");
  std::vector<OpTable> tables = tables_from(j["tables"], n, carrier->size());

  LoadedAlgebra out;
  out.carrier = carrier;
  out.tables = tables;
  auto r = MultiSemigroup::validate(carrier, std::move(tables));
  if (auto* alg = std::get_if<MultiSemigroup>(&r))
    out.algebra = std::move(*alg);
  else
    out.failure = std::get<AssocFailure>(r);
  return out;
}

json algebra_to(const MultiSemigroup& alg) {
  json j;
  j["schema"] = 1;
  j["n"] = alg.op_count();
  j["elements"] = alg.carrier()->names();
  j["tables"] = tables_to(alg);
  return j;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::malformed_input, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::malformed_input, "cannot write '" + path + "'");
  out << text;
}

LoadedAlgebra parse_algebra(const std::string& json_text) {
  return algebra_from(parse_text(json_text));
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  return parse_algebra(read_file(path));
}

std::string algebra_to_json(const MultiSemigroup& alg) { return algebra_to(alg).dump(2); }

FunctionSet parse_function_set(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("arity") || !j["arity"].is_number_unsigned())
    fail(ErrorCode::malformed_input, "function set needs \"arity\"");
  const std::size_t arity = j["arity"].get<std::size_t>();
  if (!j.contains("carrier")) fail(ErrorCode::malformed_input, "function set needs \"carrier\"");
  CarrierPtr carrier = carrier_from(j["carrier"], "carrier");
  if (!j.contains("functions") || !j["functions"].is_object())
    fail(ErrorCode::malformed_input, "function set needs a \"functions\" object");

  FunctionSet fs{arity, carrier, {}};
  for (const auto& [name, entries] : j["functions"].items())
    fs.functions.push_back(NamedFunction{name, function_from(entries, arity, carrier, name)});
  return fs;
}

FunctionSet load_function_set_file(const std::string& path) {
  return parse_function_set(read_file(path));
}

std::string function_set_to_json(const FunctionSet& fs) {
  json j;
  j["schema"] = 1;
  j["arity"] = fs.arity;
  j["carrier"] = fs.carrier->names();
  json fns = json::object();
  for (const NamedFunction& f : fs.functions) fns[f.name] = function_to(f.fn);
  j["functions"] = std::move(fns);
  return j.dump(2);
}

Representation parse_representation(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("algebra"))
    fail(ErrorCode::malformed_input, "representation needs an \"algebra\" object");
  LoadedAlgebra la = algebra_from(j["algebra"]);
  if (!la.algebra) fail(ErrorCode::malformed_table, "representation algebra not associative");

  FunctionSet fs = parse_function_set(json_text);
  if (fs.arity != la.algebra->op_count())
    fail(ErrorCode::arity_mismatch, "arity must equal the algebra's operation count");

  std::vector<PlaceFunction> assignment;
  for (const std::string& g : la.algebra->carrier()->names()) {
    auto it = std::find_if(fs.functions.begin(), fs.functions.end(),
                           [&](const NamedFunction& f) { return f.name == g; });
    if (it == fs.functions.end())
      fail(ErrorCode::malformed_input, "missing function for element '" + g + "'");
    assignment.push_back(it->fn);
  }
  return Representation(std::move(*la.algebra), fs.carrier, std::move(assignment));
}

Representation load_representation_file(const std::string& path) {
  return parse_representation(read_file(path));
}

std::string representation_to_json(const Representation& rep) {
  json j;
  j["schema"] = 1;
  j["algebra"] = algebra_to(rep.algebra());
  j["arity"] = rep.algebra().op_count();
  j["carrier"] = rep.points()->names();
  json fns = json::object();
  for (std::size_t g = 0; g < rep.algebra().size(); ++g)
    fns[rep.algebra().carrier()->name(static_cast<Elem>(g))] =
        function_to(rep.of(static_cast<Elem>(g)));
  j["functions"] = std::move(fns);
  return j.dump(2);
}

BinaryRelation parse_relation(const std::string& json_text, CarrierPtr over) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
    fail(ErrorCode::malformed_input, "relation needs a \"pairs\" array");
  std::set<std::pair<Elem, Elem>> pairs;
  for (const json& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      fail(ErrorCode::malformed_input, "pairs are [name, name]");
    pairs.emplace(over->require(p[0].get<std::string>()), over->require(p[1].get<std::string>()));
  }
  return BinaryRelation(std::move(over), std::move(pairs));
}

BinaryRelation load_relation_file(const std::string& path, CarrierPtr over) {
  return parse_relation(read_file(path), std::move(over));
}

std::string relation_to_json(const BinaryRelation& rel) {
  json j;
  j["schema"] = 1;
  json pairs = json::array();
  for (const auto& [x, y] : rel.pairs())
    pairs.push_back(json::array({rel.over()->name(x), rel.over()->name(y)}));
  j["pairs"] = std::move(pairs);
  return j.dump(2);
}

DeterminingPair parse_determining_pair(const std::string& json_text, const MultiSemigroup& base) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("extension"))
    fail(ErrorCode::malformed_input, "pair needs an \"extension\" object");
  const json& ej = j["extension"];
  LoadedAlgebra la = algebra_from(ej);
  if (!la.algebra) fail(ErrorCode::malformed_table, "extension tables not associative");
  MultiSemigroup ext_alg = std::move(*la.algebra);
  const CarrierPtr ext_carrier = ext_alg.carrier();

  if (!ej.contains("selectors") || !ej["selectors"].is_array())
    fail(ErrorCode::malformed_input, "extension needs a \"selectors\" array");
  std::vector<Elem> selectors;
  for (const json& s : ej["selectors"]) {
    if (!s.is_string()) fail(ErrorCode::malformed_input, "selectors are element names");
    selectors.push_back(ext_carrier->require(s.get<std::string>()));
  }

  std::vector<Elem> embedding;
  for (const std::string& g : base.carrier()->names()) {
    if (ej.contains("embedding")) {
      const json& em = ej["embedding"];
      if (!em.is_object() || !em.contains(g) || !em[g].is_string())
        fail(ErrorCode::malformed_input, "embedding must map every base element");
      embedding.push_back(ext_carrier->require(em[g].get<std::string>()));
    } else {
      embedding.push_back(ext_carrier->require(g));
    }
  }

  if (!j.contains("classes") || !j["classes"].is_array())
    fail(ErrorCode::malformed_input, "pair needs a \"classes\" array");
  std::vector<std::vector<Elem>> classes;
  for (const json& cj : j["classes"]) {
    if (!cj.is_array()) fail(ErrorCode::malformed_input, "each class is a name array");
    std::vector<Elem> cls;
    for (const json& m : cj) {
      if (!m.is_string()) fail(ErrorCode::malformed_input, "class members are element names");
      cls.push_back(ext_carrier->require(m.get<std::string>()));
    }
    classes.push_back(std::move(cls));
  }

  std::vector<Elem> w;
  if (j.contains("W")) {
    if (!j["W"].is_array()) fail(ErrorCode::malformed_input, "\"W\" is a name array");
    for (const json& m : j["W"]) {
      if (!m.is_string()) fail(ErrorCode::malformed_input, "W members are element names");
      w.push_back(ext_carrier->require(m.get<std::string>()));
    }
  }
  std::sort(w.begin(), w.end());

  return DeterminingPair{UnitaryExtension{std::move(ext_alg), std::move(selectors),
                                          std::move(embedding)},
                         PartialEquivalence(ext_carrier, std::move(classes)), std::move(w)};
}

DeterminingPair load_pair_file(const std::string& path, const MultiSemigroup& base) {
  return parse_determining_pair(read_file(path), base);
}

std::string determining_pair_to_json(const DeterminingPair& dp, const MultiSemigroup& base) {
  const Carrier& ec = *dp.extension.algebra.carrier();
  json j;
  j["schema"] = 1;
  json ext = algebra_to(dp.extension.algebra);
  json sel = json::array();
  for (Elem e : dp.extension.selectors) sel.push_back(ec.name(e));
  ext["selectors"] = std::move(sel);
  json em = json::object();
  for (std::size_t g = 0; g < dp.extension.embedding.size(); ++g)
    em[base.carrier()->name(static_cast<Elem>(g))] = ec.name(dp.extension.embedding[g]);
  ext["embedding"] = std::move(em);
  j["extension"] = std::move(ext);

  json classes = json::array();
  for (const auto& cls : dp.classes.classes()) {
    json cj = json::array();
    for (Elem m : cls) cj.push_back(ec.name(m));
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);

  json w = json::array();
  for (Elem m : dp.exceptional) w.push_back(ec.name(m));
  j["W"] = std::move(w);
  return j.dump(2);
}

}  // namespace placefn
